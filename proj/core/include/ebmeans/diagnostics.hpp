// Empirical checks of the theory-facing quantities: omega concentration,
// the posterior-mean identity for omega, the effective-dimension tail, and
// the loss-to-rate concentration ratio.

#pragma once

#include <string>
#include <vector>

#include "ebmeans/model.hpp"
#include "ebmeans/sampler.hpp"

namespace ebmeans {

// Rate unit s * log(n/s) for s-sparse vectors. Requires 1 <= s < n.
double epsilon_n(int n, int s);

struct HistogramBin {
  double left = 0.0;
  double right = 0.0;
  std::int64_t count = 0;
};

struct OmegaConcentration {
  std::vector<HistogramBin> hist;
  double mode_loc = 0.0;  // midpoint of the highest-count bin
};

// Equal-width histogram of the retained omega draws on [min, max]; needs at
// least 100 draws. Constant draws collapse to a single occupied bin.
OmegaConcentration omega_concentration(const PosteriorChain& chain, int bins);

// Fraction of retained draws with 1 - omega > delta_n, where
// delta_n = k_const * epsilon_n(n, s) / n.
double dimension_tail(const PosteriorChain& chain, int s, double k_const);

struct EwIdentity {
  double residual = 0.0;  // mean(omega) - [a/(a+1+1/n) + mean(D)/(n(a+1+1/n))]
  double stderr_ = 0.0;   // Monte Carlo standard error of the difference
};

// Per-draw differences omega_t - E(omega | D_t) are uncorrelated across the
// chain (omega_t is drawn fresh given theta_t), so the naive standard error
// is valid here.
EwIdentity ew_identity(const PosteriorChain& chain, const ModelConfig& model);

double ew_identity_residual(const PosteriorChain& chain, const ModelConfig& model);

// ||theta_hat - theta_star||^2 / epsilon_n(n, s). Requires s >= 1.
double concentration_ratio(const std::vector<double>& theta_hat,
                           const std::vector<double>& theta_star, int s);

struct DiagnosticsReport {
  std::vector<HistogramBin> omega_hist;
  double omega_mode_loc = 0.0;
  double ew_identity_residual = 0.0;
  double ew_identity_stderr = 0.0;
  double dim_tail_prob = 0.0;
  double concentration_ratio = 0.0;  // NaN when no ground truth is available
  double epsilon_n = 0.0;
  double delta_n = 0.0;
  double k_const = 0.0;
  int s = 0;
  std::string s_source;  // "config" | "truth" | "threshold"
};

// Assembles the full report for a chain. `s` and its provenance are the
// caller's; pass the truth vector when known so the ratio can be filled in.
DiagnosticsReport make_diagnostics_report(const PosteriorChain& chain, int s,
                                          const std::string& s_source,
                                          double k_const, int bins,
                                          const std::vector<double>* theta_star);

}  // namespace ebmeans
