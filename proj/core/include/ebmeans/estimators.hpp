// Point estimators and hyperparameter rules: posterior mean, inclusion
// probabilities, universal/oracle hard thresholding, method-of-moments alpha.

#pragma once

#include <string>
#include <vector>

#include "ebmeans/model.hpp"
#include "ebmeans/sampler.hpp"

namespace ebmeans {

enum class EstimatorLabel { EBM, HT, HTO };

const char* to_string(EstimatorLabel label);
EstimatorLabel estimator_from_string(const std::string& name);  // throws config_error

struct EstimateReport {
  std::vector<double> theta_hat;
  std::vector<double> inclusion;  // P(theta_i != 0 | X), entries in [0,1]
  double omega_mean = 0.0;
  double alpha_used = 0.0;
  EstimatorLabel estimator_label = EstimatorLabel::EBM;
};

// Coordinate-wise average of the retained draws. Throws usage_error on an
// empty chain.
std::vector<double> posterior_mean(const PosteriorChain& chain);

// Per-coordinate fraction of retained draws with theta_i != 0.
std::vector<double> inclusion_probabilities(const PosteriorChain& chain);

// sqrt(2 log n). Requires n >= 2 (log 1 = 0 gives a degenerate threshold).
double universal_threshold(int n);

// Keep x_i when |x_i| > t (strict), else 0.
std::vector<double> hard_threshold(const Observations& data, double t);

struct OracleThreshold {
  double t_star = 0.0;
  std::vector<double> estimate;
  double loss = 0.0;  // realized ||estimate - truth||^2
};

// Threshold minimizing the realized loss against the known truth, scanned
// over {0} u {|x_i|} u {sqrt(2 log n)}, ties broken toward the smaller
// threshold.
OracleThreshold oracle_hard_threshold(const Observations& data,
                                      const std::vector<double>& truth);

// Method-of-moments estimate D_hat / (n (n - D_hat)), where D_hat counts
// |x_i| <= sqrt(2 log n). Throws usage_error when D_hat = n (degenerate).
double mom_alpha(const Observations& data);

// mom_alpha with fallback to default_alpha(n) when the estimate is
// degenerate (D_hat = n) or nonpositive (D_hat = 0, unusable as a beta
// shape).
double resolve_auto_alpha(const Observations& data);

// Assemble the posterior-mean report for a chain.
EstimateReport make_estimate_report(const PosteriorChain& chain);

}  // namespace ebmeans
