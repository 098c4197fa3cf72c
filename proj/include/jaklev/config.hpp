#pragma once

// Experiment configuration: one JSON document drives every subcommand.
// Parsing resolves all defaults immediately, so serializing a parsed
// config echoes the complete effective configuration (the same document
// lands in every report's metadata sidecar), and parse -> serialize ->
// parse is the identity.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "jaklev/errors.hpp"
#include "jaklev/scale.hpp"
#include "jaklev/test_function.hpp"

namespace jaklev {

struct CertificateParams {
  std::vector<std::string> theorems = {"T2", "T3", "T4", "T5"};
  double domain = 1.0;                    // [0, A] for the moduli
  std::vector<double> x_list = {0.25, 0.5, 0.75, 1.0};
  std::vector<double> t5_alphas = {0.5, 1.0};
  double t5_alpha1 = 1.0;
  double t5_alpha2 = 1.0;
  double t5_m_margin = 1.25;              // M_lip = margin * grid estimate
  double t5_domain_hi = 4.0;
  long t5_samples = 250000;
};

struct WeightedParams {
  double x_max = 50.0;
  long grid_points = 200;
};

struct ExperimentConfig {
  std::vector<double> gf_coeffs = {1.0};
  ScaleSequence scale = ScaleSequence::power(0.5);
  std::vector<long> n_list = {64, 128, 256, 512, 1024, 2048, 4096, 8192, 16384};
  double x_max = 1.0;    // x-grid on [0, x_max]
  long x_points = 33;
  std::vector<TestFunction> functions = {TestFunction::exponential(-1.0),
                                         TestFunction::sine(1.0),
                                         TestFunction::abs_shift(0.5)};
  double epsilon = 1e-12;
  int quad_order = 8;
  std::vector<double> moment_x_list = {0.0, 0.5, 1.0, 5.0};
  CertificateParams certificates;
  WeightedParams weighted;

  void validate() const {
    if (gf_coeffs.empty()) throw ConfigError("config: gf.coeffs must be nonempty");
    if (n_list.empty()) throw ConfigError("config: n_list must be nonempty");
    for (std::size_t i = 0; i < n_list.size(); ++i) {
      if (n_list[i] < 1) throw ConfigError("config: n_list entries must be >= 1");
      if (i > 0 && n_list[i] <= n_list[i - 1]) {
        throw ConfigError("config: n_list must be strictly increasing at index " +
                          std::to_string(i));
      }
    }
    if (!(x_max > 0.0)) throw ConfigError("config: x_grid.max must be > 0");
    if (x_points < 2) throw ConfigError("config: x_grid.points must be >= 2");
    if (!(epsilon > 0.0) || !(epsilon < 1.0)) throw ConfigError("config: epsilon must be in (0,1)");
    if (quad_order < 2) throw ConfigError("config: quad_order must be >= 2");
    if (functions.empty()) throw ConfigError("config: functions must be nonempty");
    if (!(weighted.x_max > 0.0) || weighted.grid_points < 1) {
      throw ConfigError("config: weighted.x_max must be > 0 and grid_points >= 1");
    }
  }
};

namespace detail {

using nlohmann::json;

inline json scale_to_json(const ScaleSequence& s) {
  switch (s.kind) {
    case ScaleSequence::Kind::Power: return {{"kind", "power"}, {"theta", s.param}};
    case ScaleSequence::Kind::Log: return {{"kind", "log"}};
    case ScaleSequence::Kind::Constant: return {{"kind", "constant"}, {"c", s.param}};
  }
  return {};
}

inline ScaleSequence scale_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "power") return ScaleSequence::power(j.at("theta").get<double>());
  if (kind == "log") return ScaleSequence::log();
  if (kind == "constant") return ScaleSequence::constant(j.at("c").get<double>());
  throw ConfigError("config: unknown scale kind '" + kind + "'");
}

inline json function_to_json(const TestFunction& f) {
  json j;
  switch (f.kind()) {
    case TestFunction::Kind::Monomial:
      j = {{"kind", "monomial"}, {"j", f.degree()}};
      break;
    case TestFunction::Kind::Exp:
      j = {{"kind", "exp"}, {"c", f.param()}};
      break;
    case TestFunction::Kind::AbsShift:
      j = {{"kind", "abs_shift"}, {"c", f.param()}};
      break;
    case TestFunction::Kind::Sin:
      j = {{"kind", "sin"}, {"c", f.param()}};
      break;
    case TestFunction::Kind::Poly:
      j = {{"kind", "poly"}, {"coeffs", f.coeffs()}};
      break;
    case TestFunction::Kind::MonomialExp:
      j = {{"kind", "monomial_exp"}, {"j", f.degree()}, {"c", f.param()}};
      break;
    case TestFunction::Kind::ClampedMonomial:
      j = {{"kind", "clamped_monomial"}, {"j", f.degree()}, {"cap", f.param()}};
      break;
    case TestFunction::Kind::Tabulated:
      throw ConfigError("config: tabulated presets are not serializable yet");
  }
  j["scale"] = f.scale();
  return j;
}

inline TestFunction function_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const double scale = j.value("scale", 1.0);
  if (kind == "monomial") return TestFunction::monomial(j.at("j").get<int>(), scale);
  if (kind == "exp") return TestFunction::exponential(j.at("c").get<double>(), scale);
  if (kind == "abs_shift") return TestFunction::abs_shift(j.at("c").get<double>(), scale);
  if (kind == "sin") return TestFunction::sine(j.at("c").get<double>(), scale);
  if (kind == "poly") return TestFunction::poly(j.at("coeffs").get<std::vector<double>>(), scale);
  if (kind == "monomial_exp") {
    return TestFunction::monomial_exp(j.at("j").get<int>(), j.at("c").get<double>(), scale);
  }
  if (kind == "clamped_monomial") {
    return TestFunction::clamped_monomial(j.at("j").get<int>(), j.at("cap").get<double>(), scale);
  }
  throw ConfigError("config: unknown function kind '" + kind + "'");
}

}  // namespace detail

inline nlohmann::json config_to_json(const ExperimentConfig& cfg) {
  nlohmann::json j;
  j["gf"] = {{"coeffs", cfg.gf_coeffs}};
  j["scale"] = detail::scale_to_json(cfg.scale);
  j["n_list"] = cfg.n_list;
  j["x_grid"] = {{"max", cfg.x_max}, {"points", cfg.x_points}};
  nlohmann::json fns = nlohmann::json::array();
  for (const auto& f : cfg.functions) fns.push_back(detail::function_to_json(f));
  j["functions"] = fns;
  j["epsilon"] = cfg.epsilon;
  j["quad_order"] = cfg.quad_order;
  j["moment_x_list"] = cfg.moment_x_list;
  j["certificates"] = {{"theorems", cfg.certificates.theorems},
                       {"domain", cfg.certificates.domain},
                       {"x_list", cfg.certificates.x_list},
                       {"t5", {{"alphas", cfg.certificates.t5_alphas},
                               {"alpha1", cfg.certificates.t5_alpha1},
                               {"alpha2", cfg.certificates.t5_alpha2},
                               {"m_margin", cfg.certificates.t5_m_margin},
                               {"domain_hi", cfg.certificates.t5_domain_hi},
                               {"samples", cfg.certificates.t5_samples}}}};
  j["weighted"] = {{"x_max", cfg.weighted.x_max}, {"grid_points", cfg.weighted.grid_points}};
  return j;
}

inline ExperimentConfig config_from_json(const nlohmann::json& j) {
  ExperimentConfig cfg;
  try {
    if (j.contains("gf")) cfg.gf_coeffs = j.at("gf").at("coeffs").get<std::vector<double>>();
    if (j.contains("scale")) cfg.scale = detail::scale_from_json(j.at("scale"));
    if (j.contains("n_list")) cfg.n_list = j.at("n_list").get<std::vector<long>>();
    if (j.contains("x_grid")) {
      cfg.x_max = j.at("x_grid").value("max", cfg.x_max);
      cfg.x_points = j.at("x_grid").value("points", cfg.x_points);
    }
    if (j.contains("functions")) {
      cfg.functions.clear();
      for (const auto& jf : j.at("functions")) {
        cfg.functions.push_back(detail::function_from_json(jf));
      }
    }
    cfg.epsilon = j.value("epsilon", cfg.epsilon);
    cfg.quad_order = j.value("quad_order", cfg.quad_order);
    if (j.contains("moment_x_list")) {
      cfg.moment_x_list = j.at("moment_x_list").get<std::vector<double>>();
    }
    if (j.contains("certificates")) {
      const auto& jc = j.at("certificates");
      auto& c = cfg.certificates;
      if (jc.contains("theorems")) c.theorems = jc.at("theorems").get<std::vector<std::string>>();
      c.domain = jc.value("domain", c.domain);
      if (jc.contains("x_list")) c.x_list = jc.at("x_list").get<std::vector<double>>();
      if (jc.contains("t5")) {
        const auto& jt = jc.at("t5");
        if (jt.contains("alphas")) c.t5_alphas = jt.at("alphas").get<std::vector<double>>();
        c.t5_alpha1 = jt.value("alpha1", c.t5_alpha1);
        c.t5_alpha2 = jt.value("alpha2", c.t5_alpha2);
        c.t5_m_margin = jt.value("m_margin", c.t5_m_margin);
        c.t5_domain_hi = jt.value("domain_hi", c.t5_domain_hi);
        c.t5_samples = jt.value("samples", c.t5_samples);
      }
    }
    if (j.contains("weighted")) {
      const auto& jw = j.at("weighted");
      cfg.weighted.x_max = jw.value("x_max", cfg.weighted.x_max);
      cfg.weighted.grid_points = jw.value("grid_points", cfg.weighted.grid_points);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  cfg.validate();
  return cfg;
}

inline std::string serialize_config(const ExperimentConfig& cfg) {
  return config_to_json(cfg).dump(2) + "\n";
}

inline ExperimentConfig parse_config(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  return config_from_json(j);
}

}  // namespace jaklev
