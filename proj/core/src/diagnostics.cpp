#include "ebmeans/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ebmeans/errors.hpp"
#include "ebmeans/estimators.hpp"

namespace ebmeans {

double epsilon_n(int n, int s) {
  if (s < 1 || s >= n)
    throw usage_error("epsilon_n requires 1 <= s < n; got s = " +
                      std::to_string(s) + ", n = " + std::to_string(n));
  return static_cast<double>(s) *
         std::log(static_cast<double>(n) / static_cast<double>(s));
}

OmegaConcentration omega_concentration(const PosteriorChain& chain, int bins) {
  if (chain.retained < 100)
    throw usage_error("omega_concentration needs >= 100 retained draws; got " +
                      std::to_string(chain.retained));
  if (bins < 1)
    throw usage_error("omega_concentration: bins must be >= 1");

  const auto [lo_it, hi_it] =
      std::minmax_element(chain.omega_draws.begin(), chain.omega_draws.end());
  const double lo = *lo_it;
  const double hi = *hi_it;

  OmegaConcentration out;
  if (lo == hi) {
    out.hist.push_back({lo, hi, chain.retained});
    out.mode_loc = lo;
    return out;
  }

  const double width = (hi - lo) / bins;
  out.hist.resize(static_cast<std::size_t>(bins));
  for (int b = 0; b < bins; ++b) {
    out.hist[static_cast<std::size_t>(b)].left = lo + b * width;
    out.hist[static_cast<std::size_t>(b)].right = lo + (b + 1) * width;
  }
  out.hist.back().right = hi;  // close the top edge exactly

  for (double w : chain.omega_draws) {
    int b = static_cast<int>((w - lo) / width);
    if (b >= bins) b = bins - 1;
    if (b < 0) b = 0;
    ++out.hist[static_cast<std::size_t>(b)].count;
  }

  std::size_t mode = 0;
  for (std::size_t b = 1; b < out.hist.size(); ++b)
    if (out.hist[b].count > out.hist[mode].count) mode = b;
  out.mode_loc = 0.5 * (out.hist[mode].left + out.hist[mode].right);
  return out;
}

double dimension_tail(const PosteriorChain& chain, int s, double k_const) {
  if (!(k_const > 0.0))
    throw usage_error("dimension_tail: k_const must be positive");
  const double delta = k_const * epsilon_n(chain.n, s) / chain.n;
  std::int64_t exceed = 0;
  for (double w : chain.omega_draws) exceed += ((1.0 - w) > delta);
  return static_cast<double>(exceed) / static_cast<double>(chain.retained);
}

EwIdentity ew_identity(const PosteriorChain& chain, const ModelConfig& model) {
  if (chain.retained < 1) throw usage_error("ew_identity: empty chain");
  const double n = static_cast<double>(model.n);
  const double denom = model.alpha + 1.0 + 1.0 / n;
  const double base = model.alpha / denom;
  const double scale = 1.0 / (n * denom);

  // r_t = omega_t - E(omega | D_t); the residual is their mean
  const std::int64_t T = chain.retained;
  double sum = 0.0;
  for (std::int64_t t = 0; t < T; ++t) {
    const double expected =
        base + scale * chain.d_theta_draws[static_cast<std::size_t>(t)];
    sum += chain.omega_draws[static_cast<std::size_t>(t)] - expected;
  }
  const double mean = sum / static_cast<double>(T);

  double stderr_ = std::numeric_limits<double>::quiet_NaN();
  if (T > 1) {
    double ss = 0.0;
    for (std::int64_t t = 0; t < T; ++t) {
      const double expected =
          base + scale * chain.d_theta_draws[static_cast<std::size_t>(t)];
      const double d =
          chain.omega_draws[static_cast<std::size_t>(t)] - expected - mean;
      ss += d * d;
    }
    stderr_ = std::sqrt(ss / (T - 1.0)) / std::sqrt(static_cast<double>(T));
  }
  return EwIdentity{mean, stderr_};
}

double ew_identity_residual(const PosteriorChain& chain, const ModelConfig& model) {
  return ew_identity(chain, model).residual;
}

double concentration_ratio(const std::vector<double>& theta_hat,
                           const std::vector<double>& theta_star, int s) {
  if (s < 1)
    throw usage_error("concentration_ratio: s must be >= 1 (rate undefined at s=0)");
  double loss = 0.0;
  for (std::size_t i = 0; i < theta_hat.size(); ++i) {
    const double d = theta_hat[i] - theta_star[i];
    loss += d * d;
  }
  return loss / epsilon_n(static_cast<int>(theta_hat.size()), s);
}

DiagnosticsReport make_diagnostics_report(const PosteriorChain& chain, int s,
                                          const std::string& s_source,
                                          double k_const, int bins,
                                          const std::vector<double>* theta_star) {
  DiagnosticsReport report;
  const OmegaConcentration conc = omega_concentration(chain, bins);
  report.omega_hist = conc.hist;
  report.omega_mode_loc = conc.mode_loc;

  const EwIdentity identity = ew_identity(chain, chain.model);
  report.ew_identity_residual = identity.residual;
  report.ew_identity_stderr = identity.stderr_;

  report.s = s;
  report.s_source = s_source;
  report.k_const = k_const;
  report.epsilon_n = epsilon_n(chain.n, s);
  report.delta_n = k_const * report.epsilon_n / chain.n;
  report.dim_tail_prob = dimension_tail(chain, s, k_const);

  if (theta_star != nullptr) {
    report.concentration_ratio =
        concentration_ratio(posterior_mean(chain), *theta_star, s);
  } else {
    report.concentration_ratio = std::numeric_limits<double>::quiet_NaN();
  }
  return report;
}

}  // namespace ebmeans
