#include "ebmeans/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ebmeans/errors.hpp"

namespace ebmeans {

const char* to_string(EstimatorLabel label) {
  switch (label) {
    case EstimatorLabel::EBM: return "EBM";
    case EstimatorLabel::HT: return "HT";
    case EstimatorLabel::HTO: return "HTO";
  }
  return "?";
}

EstimatorLabel estimator_from_string(const std::string& name) {
  if (name == "EBM") return EstimatorLabel::EBM;
  if (name == "HT") return EstimatorLabel::HT;
  if (name == "HTO") return EstimatorLabel::HTO;
  throw config_error("unknown estimator '" + name + "' (expected EBM, HT, or HTO)");
}

std::vector<double> posterior_mean(const PosteriorChain& chain) {
  if (chain.retained < 1) throw usage_error("posterior_mean: chain has no retained draws");
  return chain.running_mean_theta;
}

std::vector<double> inclusion_probabilities(const PosteriorChain& chain) {
  if (chain.retained < 1)
    throw usage_error("inclusion_probabilities: chain has no retained draws");
  return chain.running_nonzero_freq;
}

double universal_threshold(int n) {
  if (n < 2)
    throw usage_error("universal_threshold requires n >= 2; got " + std::to_string(n));
  return std::sqrt(2.0 * std::log(static_cast<double>(n)));
}

std::vector<double> hard_threshold(const Observations& data, double t) {
  std::vector<double> out(data.x.size());
  for (std::size_t i = 0; i < data.x.size(); ++i)
    out[i] = std::abs(data.x[i]) > t ? data.x[i] : 0.0;
  return out;
}

namespace {

double threshold_loss(const Observations& data, const std::vector<double>& truth,
                      double t) {
  double loss = 0.0;
  for (std::size_t i = 0; i < data.x.size(); ++i) {
    const double est = std::abs(data.x[i]) > t ? data.x[i] : 0.0;
    const double d = est - truth[i];
    loss += d * d;
  }
  return loss;
}

}  // namespace

OracleThreshold oracle_hard_threshold(const Observations& data,
                                      const std::vector<double>& truth) {
  const std::size_t n = data.x.size();
  if (truth.size() != n)
    throw usage_error("oracle_hard_threshold: truth length " +
                      std::to_string(truth.size()) + " != data length " +
                      std::to_string(n));

  std::vector<double> candidates;
  candidates.reserve(n + 2);
  candidates.push_back(0.0);
  for (double x : data.x) candidates.push_back(std::abs(x));
  if (n >= 2) candidates.push_back(universal_threshold(static_cast<int>(n)));
  std::sort(candidates.begin(), candidates.end());

  OracleThreshold best;
  best.t_star = candidates.front();
  best.loss = threshold_loss(data, truth, best.t_star);
  for (std::size_t k = 1; k < candidates.size(); ++k) {
    if (candidates[k] == candidates[k - 1]) continue;
    const double loss = threshold_loss(data, truth, candidates[k]);
    if (loss < best.loss) {  // strict: ties resolve to the smaller threshold
      best.loss = loss;
      best.t_star = candidates[k];
    }
  }
  best.estimate = hard_threshold(data, best.t_star);
  return best;
}

double mom_alpha(const Observations& data) {
  const int n = data.size();
  if (n < 2) throw usage_error("mom_alpha requires n >= 2; got " + std::to_string(n));
  const double thr = universal_threshold(n);
  std::int64_t d_hat = 0;
  for (double x : data.x) d_hat += (std::abs(x) <= thr);
  if (d_hat == n)
    throw usage_error("mom_alpha degenerate: no |x_i| exceeds the universal threshold");
  return static_cast<double>(d_hat) /
         (static_cast<double>(n) * static_cast<double>(n - d_hat));
}

double resolve_auto_alpha(const Observations& data) {
  try {
    const double a = mom_alpha(data);
    if (a > 0.0) return a;
  } catch (const usage_error&) {
  }
  return default_alpha(data.size());
}

EstimateReport make_estimate_report(const PosteriorChain& chain) {
  EstimateReport report;
  report.theta_hat = posterior_mean(chain);
  report.inclusion = inclusion_probabilities(chain);
  report.omega_mean =
      std::accumulate(chain.omega_draws.begin(), chain.omega_draws.end(), 0.0) /
      static_cast<double>(chain.retained);
  report.alpha_used = chain.model.alpha;
  report.estimator_label = EstimatorLabel::EBM;
  return report;
}

}  // namespace ebmeans
