// Config file schemas. Parsing is fail-closed: unknown keys and wrong types
// are configuration errors.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ebmeans/sampler.hpp"
#include "ebmeans/simulation.hpp"

namespace ebmeans::cli {

using nlohmann::json;

// "model" block: kappa, sigma2, and alpha as a number or the string "auto".
struct ModelSettings {
  double kappa = 0.99;
  double sigma2 = 100.0;
  std::optional<double> alpha;  // explicit value
  bool auto_alpha = false;      // "auto": method of moments, fallback 50/n
  std::optional<int> n;         // optional; must match the data when given
};

struct DiagnosticsSettings {
  int bins = 40;
  double k_const = 2.0;
  std::optional<int> s;
};

// fit / diagnose config document.
struct RunConfig {
  ModelSettings model;
  SamplerConfig sampler;
  DiagnosticsSettings diagnostics;
  std::optional<TruthSpec> truth;       // diagnose only: generate the dataset
  std::optional<std::uint64_t> root_seed;  // diagnose-with-truth stream root
};

struct CellSpec {
  std::string label;
  TruthSpec truth;
};

// simulate config document: a grid of truth cells sharing one model/sampler.
struct TableConfig {
  int n = 0;
  int replications = 100;
  std::vector<EstimatorLabel> estimators;
  ModelSettings model;
  SamplerConfig sampler;  // seed field not accepted; root_seed governs
  std::uint64_t root_seed = kDefaultSeed;
  std::vector<CellSpec> cells;
};

RunConfig parse_run_config(const json& doc, bool allow_truth);
TableConfig parse_table_config(const json& doc);

// Canonical resolved-config echoes (these are what the digest covers).
json run_config_to_json(const RunConfig& cfg);
json table_config_to_json(const TableConfig& cfg);
json truth_to_json(const TruthSpec& truth);

void check_keys(const json& obj, const std::string& context,
                std::initializer_list<const char*> allowed);

}  // namespace ebmeans::cli
