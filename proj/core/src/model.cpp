#include "ebmeans/model.hpp"

#include <cassert>
#include <cmath>
#include <string>

#include "ebmeans/errors.hpp"

namespace ebmeans {

void ModelConfig::validate() const {
  if (n < 1)
    throw config_error("n must be a positive integer; got " + std::to_string(n));
  if (!(kappa > 0.0) || !(kappa < 1.0))
    throw config_error("kappa must lie in the open interval (0,1); got " +
                       std::to_string(kappa));
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2))
    throw config_error("sigma2 must be a positive real; got " +
                       std::to_string(sigma2));
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw config_error("alpha must be a positive real; got " +
                       std::to_string(alpha));
  assert(slab_variance() > 0.0 && std::isfinite(slab_variance()));
}

void FeasibilityQuery::validate() const {
  if (!(beta > 1.0) || !std::isfinite(beta))
    throw config_error("beta must be a real > 1; got " + std::to_string(beta));
  if (!(kappa > 0.0) || !(kappa < 1.0))
    throw config_error("kappa must lie in the open interval (0,1); got " +
                       std::to_string(kappa));
  if (!(sigma2 > 0.0) || !std::isfinite(sigma2))
    throw config_error("sigma2 must be a positive real; got " +
                       std::to_string(sigma2));
}

double spike_logweight(double x_i, double omega, double kappa) {
  assert(omega > 0.0 && omega < 1.0);
  return std::log(omega) - 0.5 * kappa * (x_i * x_i);
}

double slab_logweight(double omega, double kappa, double sigma2) {
  assert(omega > 0.0 && omega < 1.0);
  assert(sigma2 > 0.0);
  return std::log1p(-omega) - 0.5 * std::log1p(kappa * sigma2);
}

double spike_probability(double x_i, double omega, double kappa, double sigma2) {
  return spike_probability_from_logs(spike_logweight(x_i, omega, kappa),
                                     slab_logweight(omega, kappa, sigma2));
}

double feasible_margin(const FeasibilityQuery& q) {
  const double lhs = 1.0 / (q.sigma2 * std::pow(1.0 + q.beta / q.sigma2, 1.0 / q.beta)) -
                     1.0 / (q.sigma2 + q.beta);
  const double rhs = q.kappa * ((1.0 - q.kappa) * q.beta - 1.0) / (q.beta - 1.0);
  return rhs - lhs;
}

double default_alpha(int n) {
  assert(n >= 1);
  return 50.0 / static_cast<double>(n);
}

}  // namespace ebmeans
