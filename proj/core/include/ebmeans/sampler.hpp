// Two-block Gibbs sampler over (theta, omega).
//
// One sweep draws every theta_i from its spike/slab full conditional at the
// current omega, then draws omega from Beta(alpha*n + D, 1 + n - D) where D
// counts the exact zeros of theta. Chains are pure functions of
// (data, model, sampler config): identical inputs give bit-identical draws.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ebmeans/model.hpp"
#include "ebmeans/rng.hpp"

namespace ebmeans {

inline constexpr std::uint64_t kDefaultSeed = 115;

struct SamplerConfig {
  std::int64_t iterations = 5000;
  std::int64_t burn_in = 1000;
  std::int64_t thin = 1;
  std::uint64_t seed = kDefaultSeed;

  std::int64_t retained_count() const { return (iterations - burn_in) / thin; }
  void validate() const;
};

// One Markov chain state. A coordinate sits in the spike if and only if its
// value is literally 0.0 (no tolerance); d_theta tracks that count exactly,
// since it feeds the Beta update.
struct GibbsState {
  std::vector<double> theta;
  double omega = 0.5;
  int d_theta = 0;
};

// Retained post-burn-in draws plus per-coordinate running summaries.
struct PosteriorChain {
  int n = 0;
  std::int64_t retained = 0;
  std::vector<double> theta_draws;  // retained x n, row-major
  std::vector<double> omega_draws;
  std::vector<int> d_theta_draws;
  std::vector<double> running_mean_theta;
  std::vector<double> running_nonzero_freq;  // per-coordinate inclusion
  ModelConfig model;                         // config echo
  SamplerConfig sampler;

  double theta_at(std::int64_t t, int i) const {
    return theta_draws[static_cast<std::size_t>(t) * n + i];
  }
  std::span<const double> theta_row(std::int64_t t) const {
    return {theta_draws.data() + static_cast<std::size_t>(t) * n,
            static_cast<std::size_t>(n)};
  }
};

// Deterministic start: theta at the universal hard-threshold estimate of the
// data, omega at max{(D+1)/(n+2), 1 - 1/(n+1)} clipped inside (0,1).
GibbsState make_initial_state(const Observations& data, const ModelConfig& model);

// theta | omega: each coordinate is zeroed with probability
// spike_probability(x_i, omega, kappa, sigma2), else drawn from
// N(x_i, sigma2/(1 + kappa*sigma2)).
void update_theta(GibbsState& state, const Observations& data,
                  const ModelConfig& model, Rng& rng);

// omega | theta ~ Beta(alpha*n + D_theta, 1 + n - D_theta), kept strictly
// inside (0,1).
void update_omega(GibbsState& state, const ModelConfig& model, Rng& rng);

PosteriorChain run_chain(const Observations& data, const ModelConfig& model,
                         const SamplerConfig& sampler);

}  // namespace ebmeans
