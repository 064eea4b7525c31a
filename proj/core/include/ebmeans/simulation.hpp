// Replicated simulation studies: ground-truth construction, data generation,
// loss computation, and the multi-estimator study driver.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ebmeans/estimators.hpp"
#include "ebmeans/model.hpp"
#include "ebmeans/rng.hpp"
#include "ebmeans/sampler.hpp"

namespace ebmeans {

// Ground truth as ordered (count, value) groups, zero-padded to length n.
struct TruthSpec {
  int n = 0;
  std::vector<std::pair<int, double>> groups;

  // number of nonzero entries (groups with value != 0)
  int signal_count() const;
  void validate() const;
};

struct StudySpec {
  TruthSpec truth;
  int replications = 100;
  std::vector<EstimatorLabel> estimators;
  double kappa = 0.99;
  double sigma2 = 100.0;
  std::optional<double> alpha;  // nullopt: auto (method-of-moments, fallback 50/n)
  SamplerConfig sampler;        // seed ignored; streams derive from root_seed
  std::uint64_t root_seed = kDefaultSeed;

  void validate() const;
};

// Stream purposes under a replication's seed space.
inline constexpr std::uint64_t kStreamData = 0;
inline constexpr std::uint64_t kStreamChain = 1;

struct ReplicationRecord {
  int replication = 0;
  std::uint64_t data_seed = 0;
  std::uint64_t chain_seed = 0;
  double alpha_used = 0.0;
  std::vector<double> losses;  // parallel to StudySpec::estimators
  double ebm_concentration_ratio = 0.0;  // NaN when EBM not requested or s = 0
};

struct StudyRow {
  EstimatorLabel estimator;
  double mse = 0.0;        // mean of per-replication losses
  double mc_stderr = 0.0;  // sample stdev / sqrt(replications); NaN for 1 rep
};

struct StudyResult {
  std::vector<StudyRow> rows;
  std::vector<ReplicationRecord> replications;
  StudySpec spec_echo;
};

// Concatenates the groups in order and pads with zeros to length n.
std::vector<double> make_theta_star(const TruthSpec& spec);

// theta* plus independent standard normal noise per coordinate.
Observations generate_data(const std::vector<double>& theta_star, Rng& rng);

// sum_i (a_i - b_i)^2
double squared_error(const std::vector<double>& theta_hat,
                     const std::vector<double>& theta_star);

// Runs `spec.replications` independent replications (data seed
// derive_seed(root, r, 0), chain seed derive_seed(root, r, 1)), feeding the
// same data realization to every requested estimator, and aggregates losses
// to MSE +- stderr. Deterministic given spec, whatever the thread count.
StudyResult run_study(const StudySpec& spec, int threads = 0);

}  // namespace ebmeans
