#include "configs.hpp"

#include <algorithm>

#include "ebmeans/errors.hpp"
#include "ebmeans/estimators.hpp"

namespace ebmeans::cli {

void check_keys(const json& obj, const std::string& context,
                std::initializer_list<const char*> allowed) {
  if (!obj.is_object())
    throw config_error(context + ": expected a JSON object");
  for (const auto& [key, value] : obj.items()) {
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* k) {
          return key == k;
        }) == allowed.end())
      throw config_error(context + ": unknown key '" + key + "'");
  }
}

namespace {

double get_number(const json& obj, const std::string& context, const char* key,
                  double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number())
    throw config_error(context + "." + key + ": expected a number");
  return v.get<double>();
}

std::int64_t get_integer(const json& obj, const std::string& context,
                         const char* key, std::int64_t fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer())
    throw config_error(context + "." + key + ": expected an integer");
  return v.get<std::int64_t>();
}

std::uint64_t get_seed(const json& obj, const std::string& context,
                       const char* key, std::uint64_t fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer() || (v.is_number_integer() && v.get<double>() < 0))
    throw config_error(context + "." + key + ": expected a non-negative integer");
  return v.get<std::uint64_t>();
}

ModelSettings parse_model(const json& obj, const std::string& context) {
  check_keys(obj, context, {"n", "kappa", "sigma2", "alpha"});
  ModelSettings m;
  m.kappa = get_number(obj, context, "kappa", m.kappa);
  m.sigma2 = get_number(obj, context, "sigma2", m.sigma2);
  if (obj.contains("n")) {
    const std::int64_t n = get_integer(obj, context, "n", 0);
    m.n = static_cast<int>(n);
  }
  if (obj.contains("alpha")) {
    const json& a = obj.at("alpha");
    if (a.is_string()) {
      if (a.get<std::string>() != "auto")
        throw config_error(context + ".alpha: expected a number or \"auto\"");
      m.auto_alpha = true;
    } else if (a.is_number()) {
      m.alpha = a.get<double>();
    } else {
      throw config_error(context + ".alpha: expected a number or \"auto\"");
    }
  }
  return m;
}

SamplerConfig parse_sampler(const json& obj, const std::string& context,
                            bool allow_seed) {
  if (allow_seed)
    check_keys(obj, context, {"iterations", "burn_in", "thin", "seed"});
  else
    check_keys(obj, context, {"iterations", "burn_in", "thin"});
  SamplerConfig s;
  s.iterations = get_integer(obj, context, "iterations", s.iterations);
  s.burn_in = get_integer(obj, context, "burn_in", s.burn_in);
  s.thin = get_integer(obj, context, "thin", s.thin);
  if (allow_seed) s.seed = get_seed(obj, context, "seed", s.seed);
  return s;
}

DiagnosticsSettings parse_diagnostics(const json& obj, const std::string& context) {
  check_keys(obj, context, {"bins", "k_const", "s"});
  DiagnosticsSettings d;
  d.bins = static_cast<int>(get_integer(obj, context, "bins", d.bins));
  d.k_const = get_number(obj, context, "k_const", d.k_const);
  if (obj.contains("s"))
    d.s = static_cast<int>(get_integer(obj, context, "s", 0));
  return d;
}

TruthSpec parse_truth(const json& obj, const std::string& context,
                      std::optional<int> outer_n) {
  check_keys(obj, context, {"n", "groups", "s", "A"});
  TruthSpec t;
  if (obj.contains("n"))
    t.n = static_cast<int>(get_integer(obj, context, "n", 0));
  else if (outer_n)
    t.n = *outer_n;
  else
    throw config_error(context + ": missing 'n'");

  const bool has_groups = obj.contains("groups");
  const bool has_sa = obj.contains("s") || obj.contains("A");
  if (has_groups == has_sa)
    throw config_error(context +
                       ": provide either 'groups' or the 's'/'A' pair, not both");
  if (has_groups) {
    const json& g = obj.at("groups");
    if (!g.is_array())
      throw config_error(context + ".groups: expected an array of [count, value]");
    for (const json& item : g) {
      if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
          !item[1].is_number())
        throw config_error(context + ".groups: each entry must be [count, value]");
      t.groups.emplace_back(static_cast<int>(item[0].get<std::int64_t>()),
                            item[1].get<double>());
    }
  } else {
    if (!obj.contains("s") || !obj.contains("A"))
      throw config_error(context + ": 's' and 'A' must be given together");
    const int s = static_cast<int>(get_integer(obj, context, "s", 0));
    const double a = get_number(obj, context, "A", 0.0);
    t.groups.emplace_back(s, a);
  }
  t.validate();
  return t;
}

}  // namespace

RunConfig parse_run_config(const json& doc, bool allow_truth) {
  if (allow_truth)
    check_keys(doc, "config",
               {"model", "sampler", "diagnostics", "truth", "root_seed"});
  else
    check_keys(doc, "config", {"model", "sampler", "diagnostics"});

  RunConfig cfg;
  if (doc.contains("model")) cfg.model = parse_model(doc.at("model"), "model");
  if (doc.contains("sampler"))
    cfg.sampler = parse_sampler(doc.at("sampler"), "sampler", true);
  if (doc.contains("diagnostics"))
    cfg.diagnostics = parse_diagnostics(doc.at("diagnostics"), "diagnostics");
  if (allow_truth && doc.contains("truth"))
    cfg.truth = parse_truth(doc.at("truth"), "truth", cfg.model.n);
  if (allow_truth && doc.contains("root_seed"))
    cfg.root_seed = get_seed(doc, "config", "root_seed", kDefaultSeed);
  return cfg;
}

TableConfig parse_table_config(const json& doc) {
  check_keys(doc, "study",
             {"n", "replications", "estimators", "model", "sampler", "root_seed",
              "cells"});
  TableConfig cfg;
  if (!doc.contains("n")) throw config_error("study: missing 'n'");
  cfg.n = static_cast<int>(get_integer(doc, "study", "n", 0));
  cfg.replications =
      static_cast<int>(get_integer(doc, "study", "replications", cfg.replications));

  if (doc.contains("estimators")) {
    const json& ests = doc.at("estimators");
    if (!ests.is_array())
      throw config_error("study.estimators: expected an array of names");
    for (const json& e : ests) {
      if (!e.is_string())
        throw config_error("study.estimators: entries must be strings");
      cfg.estimators.push_back(estimator_from_string(e.get<std::string>()));
    }
  } else {
    cfg.estimators = {EstimatorLabel::EBM, EstimatorLabel::HT, EstimatorLabel::HTO};
  }

  if (doc.contains("model")) {
    cfg.model = parse_model(doc.at("model"), "model");
    if (cfg.model.n)
      throw config_error("model.n: set the study-level 'n' instead");
  }
  if (doc.contains("sampler"))
    cfg.sampler = parse_sampler(doc.at("sampler"), "sampler", false);
  cfg.root_seed = get_seed(doc, "study", "root_seed", cfg.root_seed);

  if (!doc.contains("cells") || !doc.at("cells").is_array() ||
      doc.at("cells").empty())
    throw config_error("study: 'cells' must be a non-empty array");
  int index = 0;
  for (const json& cell : doc.at("cells")) {
    check_keys(cell, "cells[" + std::to_string(index) + "]",
               {"label", "groups", "s", "A", "n"});
    CellSpec spec;
    spec.truth = parse_truth(cell, "cells[" + std::to_string(index) + "]", cfg.n);
    if (cell.contains("label")) {
      if (!cell.at("label").is_string())
        throw config_error("cells[" + std::to_string(index) +
                           "].label: expected a string");
      spec.label = cell.at("label").get<std::string>();
    } else {
      spec.label = "cell" + std::to_string(index);
    }
    cfg.cells.push_back(std::move(spec));
    ++index;
  }
  return cfg;
}

json truth_to_json(const TruthSpec& truth) {
  json groups = json::array();
  for (const auto& [count, value] : truth.groups)
    groups.push_back(json::array({count, value}));
  return json{{"n", truth.n}, {"groups", groups}};
}

namespace {

json model_to_json(const ModelSettings& m) {
  json out{{"kappa", m.kappa}, {"sigma2", m.sigma2}};
  if (m.auto_alpha)
    out["alpha"] = "auto";
  else if (m.alpha)
    out["alpha"] = *m.alpha;
  if (m.n) out["n"] = *m.n;
  return out;
}

json sampler_to_json(const SamplerConfig& s, bool with_seed) {
  json out{{"iterations", s.iterations}, {"burn_in", s.burn_in}, {"thin", s.thin}};
  if (with_seed) out["seed"] = s.seed;
  return out;
}

}  // namespace

json run_config_to_json(const RunConfig& cfg) {
  json out{{"model", model_to_json(cfg.model)},
           {"sampler", sampler_to_json(cfg.sampler, true)},
           {"diagnostics",
            json{{"bins", cfg.diagnostics.bins}, {"k_const", cfg.diagnostics.k_const}}}};
  if (cfg.diagnostics.s) out["diagnostics"]["s"] = *cfg.diagnostics.s;
  if (cfg.truth) out["truth"] = truth_to_json(*cfg.truth);
  if (cfg.root_seed) out["root_seed"] = *cfg.root_seed;
  return out;
}

json table_config_to_json(const TableConfig& cfg) {
  json cells = json::array();
  for (const CellSpec& cell : cfg.cells)
    cells.push_back(json{{"label", cell.label}, {"truth", truth_to_json(cell.truth)}});
  json ests = json::array();
  for (EstimatorLabel e : cfg.estimators) ests.push_back(to_string(e));
  return json{{"n", cfg.n},
              {"replications", cfg.replications},
              {"estimators", ests},
              {"model", model_to_json(cfg.model)},
              {"sampler", sampler_to_json(cfg.sampler, false)},
              {"root_seed", cfg.root_seed},
              {"cells", cells}};
}

}  // namespace ebmeans::cli
