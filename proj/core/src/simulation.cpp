#include "ebmeans/simulation.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "ebmeans/diagnostics.hpp"
#include "ebmeans/errors.hpp"

namespace ebmeans {

int TruthSpec::signal_count() const {
  int s = 0;
  for (const auto& [count, value] : groups)
    if (value != 0.0) s += count;
  return s;
}

void TruthSpec::validate() const {
  if (n < 1)
    throw config_error("truth: n must be positive; got " + std::to_string(n));
  std::int64_t total = 0;
  for (const auto& [count, value] : groups) {
    if (count < 1)
      throw config_error("truth: group counts must be positive; got " +
                         std::to_string(count));
    if (!std::isfinite(value))
      throw config_error("truth: group values must be finite");
    total += count;
  }
  if (total > n)
    throw config_error("truth: group counts sum to " + std::to_string(total) +
                       ", exceeding n = " + std::to_string(n));
}

void StudySpec::validate() const {
  truth.validate();
  if (replications < 1)
    throw config_error("replications must be >= 1; got " +
                       std::to_string(replications));
  if (estimators.empty()) throw config_error("no estimators requested");
  sampler.validate();
  // kappa/sigma2/alpha bounds checked through ModelConfig per replication
  ModelConfig probe{truth.n, kappa, sigma2, alpha.value_or(default_alpha(truth.n))};
  probe.validate();
}

std::vector<double> make_theta_star(const TruthSpec& spec) {
  spec.validate();
  std::vector<double> theta(static_cast<std::size_t>(spec.n), 0.0);
  std::size_t pos = 0;
  for (const auto& [count, value] : spec.groups) {
    for (int k = 0; k < count; ++k) theta[pos++] = value;
  }
  return theta;
}

Observations generate_data(const std::vector<double>& theta_star, Rng& rng) {
  std::vector<double> x(theta_star.size());
  for (std::size_t i = 0; i < theta_star.size(); ++i)
    x[i] = theta_star[i] + rng.normal();
  return Observations(std::move(x));
}

double squared_error(const std::vector<double>& theta_hat,
                     const std::vector<double>& theta_star) {
  if (theta_hat.size() != theta_star.size())
    throw usage_error("squared_error: length mismatch " +
                      std::to_string(theta_hat.size()) + " vs " +
                      std::to_string(theta_star.size()));
  double loss = 0.0;
  for (std::size_t i = 0; i < theta_hat.size(); ++i) {
    const double d = theta_hat[i] - theta_star[i];
    loss += d * d;
  }
  return loss;
}

namespace {

ReplicationRecord run_replication(const StudySpec& spec,
                                  const std::vector<double>& theta_star, int r) {
  ReplicationRecord rec;
  rec.replication = r;
  rec.data_seed = derive_seed(spec.root_seed, static_cast<std::uint64_t>(r), kStreamData);
  rec.chain_seed = derive_seed(spec.root_seed, static_cast<std::uint64_t>(r), kStreamChain);
  rec.ebm_concentration_ratio = std::numeric_limits<double>::quiet_NaN();

  Rng data_rng(rec.data_seed);
  const Observations data = generate_data(theta_star, data_rng);

  ModelConfig model;
  model.n = spec.truth.n;
  model.kappa = spec.kappa;
  model.sigma2 = spec.sigma2;
  model.alpha = spec.alpha ? *spec.alpha : resolve_auto_alpha(data);
  model.validate();
  rec.alpha_used = model.alpha;

  const int s = spec.truth.signal_count();

  rec.losses.reserve(spec.estimators.size());
  for (EstimatorLabel label : spec.estimators) {
    std::vector<double> theta_hat;
    switch (label) {
      case EstimatorLabel::EBM: {
        SamplerConfig scfg = spec.sampler;
        scfg.seed = rec.chain_seed;
        const PosteriorChain chain = run_chain(data, model, scfg);
        theta_hat = posterior_mean(chain);
        if (s >= 1)
          rec.ebm_concentration_ratio =
              concentration_ratio(theta_hat, theta_star, s);
        break;
      }
      case EstimatorLabel::HT:
        theta_hat = hard_threshold(data, universal_threshold(model.n));
        break;
      case EstimatorLabel::HTO:
        theta_hat = oracle_hard_threshold(data, theta_star).estimate;
        break;
    }
    const double loss = squared_error(theta_hat, theta_star);
    if (!std::isfinite(loss))
      throw numeric_error("non-finite loss for estimator " +
                              std::string(to_string(label)),
                          r, rec.data_seed);
    rec.losses.push_back(loss);
  }
  return rec;
}

}  // namespace

StudyResult run_study(const StudySpec& spec, int threads) {
  spec.validate();
  const std::vector<double> theta_star = make_theta_star(spec.truth);
  const int reps = spec.replications;

  StudyResult result;
  result.spec_echo = spec;
  result.replications.resize(static_cast<std::size_t>(reps));

  int workers = threads > 0 ? threads
                            : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (workers > reps) workers = reps;

  // Replications are index-keyed: each writes its own slot, so results do
  // not depend on scheduling.
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (;;) {
      const int r = next.fetch_add(1);
      if (r >= reps) return;
      try {
        result.replications[static_cast<std::size_t>(r)] =
            run_replication(spec, theta_star, r);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  // Aggregate in replication order.
  const std::size_t n_est = spec.estimators.size();
  result.rows.resize(n_est);
  for (std::size_t e = 0; e < n_est; ++e) {
    double sum = 0.0;
    for (int r = 0; r < reps; ++r)
      sum += result.replications[static_cast<std::size_t>(r)].losses[e];
    const double mse = sum / static_cast<double>(reps);

    double stderr_ = std::numeric_limits<double>::quiet_NaN();
    if (reps > 1) {
      double ss = 0.0;
      for (int r = 0; r < reps; ++r) {
        const double d =
            result.replications[static_cast<std::size_t>(r)].losses[e] - mse;
        ss += d * d;
      }
      stderr_ = std::sqrt(ss / (reps - 1.0)) / std::sqrt(static_cast<double>(reps));
    }
    result.rows[e] = StudyRow{spec.estimators[e], mse, stderr_};
  }
  return result;
}

}  // namespace ebmeans
