// Two-groups empirical Bayes model for sparse normal means: configuration,
// the spike/slab conditional weights in log form, and the (kappa, sigma^2)
// feasibility margin.
//
// Model: X_i ~ N(theta_i, 1) with theta_i | omega drawn from a point mass at
// zero with probability omega and from N(X_i, sigma^2) otherwise, a
// fractional likelihood power kappa in (0,1), and omega ~ Beta(alpha*n, 1).

#pragma once

#include <cmath>
#include <vector>

namespace ebmeans {

struct ModelConfig {
  int n = 0;            // problem dimension
  double kappa = 0.99;  // fractional likelihood power, in (0, 1)
  double sigma2 = 100.0;  // slab variance, > 0
  double alpha = 0.0;     // beta prior shape, > 0

  // Variance of the slab full conditional, sigma^2 / (1 + kappa*sigma^2).
  double slab_variance() const { return sigma2 / (1.0 + kappa * sigma2); }

  // Throws config_error naming the violated bound.
  void validate() const;
};

struct FeasibilityQuery {
  double kappa = 0.99;
  double sigma2 = 100.0;
  double beta = 200.0;  // Holder exponent, > 1

  void validate() const;
};

// Observed data, unit noise variance assumed.
struct Observations {
  std::vector<double> x;

  Observations() = default;
  explicit Observations(std::vector<double> values) : x(std::move(values)) {}

  int size() const { return static_cast<int>(x.size()); }
  double operator[](int i) const { return x[static_cast<std::size_t>(i)]; }
};

// log of the unnormalized point-mass weight, log(omega) - (kappa/2) x_i^2.
// Requires omega in (0, 1); violations are programming errors.
double spike_logweight(double x_i, double omega, double kappa);

// log of the unnormalized slab weight, log(1-omega) - log(1+kappa*sigma2)/2.
double slab_logweight(double omega, double kappa, double sigma2);

// Normalized probability of the point mass, computed with a max-shifted
// log-sum-exp so it stays in [0,1] without NaN for any finite x_i.
double spike_probability(double x_i, double omega, double kappa, double sigma2);

// Shared kernel: normalized spike probability from the two log weights.
inline double spike_probability_from_logs(double spike_lw, double slab_lw) {
  const double m = spike_lw > slab_lw ? spike_lw : slab_lw;
  const double pa = std::exp(spike_lw - m);
  const double pb = std::exp(slab_lw - m);
  return pa / (pa + pb);
}

// Signed feasibility margin for the (kappa, sigma^2) region at exponent
// beta: positive means strictly feasible, negative means outside. Exposed
// as a margin rather than a verdict because the default working point
// sigma^2 = 1/(1-kappa) sits on the asymptotic boundary.
double feasible_margin(const FeasibilityQuery& q);

// Dimension-driven default for alpha: 50/n, matching 0.25, 0.10, 0.05 at
// n = 200, 500, 1000.
double default_alpha(int n);

}  // namespace ebmeans
