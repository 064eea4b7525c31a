#include "ebmeans/sampler.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>

#include "ebmeans/errors.hpp"

namespace ebmeans {

void SamplerConfig::validate() const {
  if (iterations < 1)
    throw config_error("iterations must be positive; got " +
                       std::to_string(iterations));
  if (burn_in < 0 || burn_in >= iterations)
    throw config_error("burn_in must satisfy 0 <= burn_in < iterations; got " +
                       std::to_string(burn_in));
  if (thin < 1)
    throw config_error("thin must be >= 1; got " + std::to_string(thin));
  if (retained_count() < 1)
    throw config_error("no draws would be retained: (iterations - burn_in)/thin = " +
                       std::to_string(retained_count()));
}

GibbsState make_initial_state(const Observations& data, const ModelConfig& model) {
  const int n = model.n;
  // sqrt(2 log n); degenerates to 0 at n = 1, which keeps every nonzero x
  const double thr = std::sqrt(2.0 * std::log(static_cast<double>(n)));

  GibbsState state;
  state.theta.resize(static_cast<std::size_t>(n));
  int zeros = 0;
  for (int i = 0; i < n; ++i) {
    if (std::abs(data[i]) > thr) {
      state.theta[static_cast<std::size_t>(i)] = data[i];
    } else {
      state.theta[static_cast<std::size_t>(i)] = 0.0;
      ++zeros;
    }
  }
  state.d_theta = zeros;

  const double w = std::max((zeros + 1.0) / (n + 2.0), 1.0 - 1.0 / (n + 1.0));
  state.omega = std::clamp(w, 0x1.0p-1074, 1.0 - 0x1.0p-53);
  return state;
}

void update_theta(GibbsState& state, const Observations& data,
                  const ModelConfig& model, Rng& rng) {
  assert(state.omega > 0.0 && state.omega < 1.0);
  const int n = model.n;
  const double log_w = std::log(state.omega);
  const double slab_lw = slab_logweight(state.omega, model.kappa, model.sigma2);
  const double slab_sd = std::sqrt(model.slab_variance());

  int zeros = 0;
  for (int i = 0; i < n; ++i) {
    const double x = data[i];
    const double spike_lw = log_w - 0.5 * model.kappa * (x * x);
    const double p_zero = spike_probability_from_logs(spike_lw, slab_lw);
    double value;
    if (rng.uniform() < p_zero) {
      value = 0.0;
    } else {
      value = x + slab_sd * rng.normal();
    }
    state.theta[static_cast<std::size_t>(i)] = value;
    if (value == 0.0) ++zeros;
  }
  state.d_theta = zeros;
}

void update_omega(GibbsState& state, const ModelConfig& model, Rng& rng) {
  assert(state.d_theta >= 0 && state.d_theta <= model.n);
  const double a = model.alpha * model.n + state.d_theta;
  const double b = 1.0 + model.n - state.d_theta;
  state.omega = rng.beta(a, b);
}

namespace {

#ifndef NDEBUG
int count_exact_zeros(const std::vector<double>& v) {
  int zeros = 0;
  for (double x : v) zeros += (x == 0.0);
  return zeros;
}
#endif

}  // namespace

PosteriorChain run_chain(const Observations& data, const ModelConfig& model,
                         const SamplerConfig& sampler) {
  model.validate();
  sampler.validate();
  if (data.size() != model.n)
    throw config_error("data length " + std::to_string(data.size()) +
                       " does not match model dimension " + std::to_string(model.n));

  const int n = model.n;
  const std::int64_t retained = sampler.retained_count();

  PosteriorChain chain;
  chain.n = n;
  chain.retained = retained;
  chain.model = model;
  chain.sampler = sampler;
  chain.theta_draws.resize(static_cast<std::size_t>(retained) * n);
  chain.omega_draws.resize(static_cast<std::size_t>(retained));
  chain.d_theta_draws.resize(static_cast<std::size_t>(retained));

  std::vector<double> theta_sum(static_cast<std::size_t>(n), 0.0);
  std::vector<std::int64_t> nonzero_count(static_cast<std::size_t>(n), 0);

  Rng rng(sampler.seed);
  GibbsState state = make_initial_state(data, model);

  std::int64_t kept = 0;
  for (std::int64_t t = 1; t <= sampler.iterations; ++t) {
    update_theta(state, data, model, rng);
    update_omega(state, model, rng);
    assert(state.d_theta == count_exact_zeros(state.theta));

    if (t > sampler.burn_in && (t - sampler.burn_in) % sampler.thin == 0) {
      double* row = chain.theta_draws.data() + static_cast<std::size_t>(kept) * n;
      for (int i = 0; i < n; ++i) {
        const double v = state.theta[static_cast<std::size_t>(i)];
        row[i] = v;
        theta_sum[static_cast<std::size_t>(i)] += v;
        nonzero_count[static_cast<std::size_t>(i)] += (v != 0.0);
      }
      chain.omega_draws[static_cast<std::size_t>(kept)] = state.omega;
      chain.d_theta_draws[static_cast<std::size_t>(kept)] = state.d_theta;
      ++kept;
    }
  }
  assert(kept == retained);

  chain.running_mean_theta.resize(static_cast<std::size_t>(n));
  chain.running_nonzero_freq.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    chain.running_mean_theta[static_cast<std::size_t>(i)] =
        theta_sum[static_cast<std::size_t>(i)] / static_cast<double>(retained);
    chain.running_nonzero_freq[static_cast<std::size_t>(i)] =
        static_cast<double>(nonzero_count[static_cast<std::size_t>(i)]) /
        static_cast<double>(retained);
  }
  return chain;
}

}  // namespace ebmeans
