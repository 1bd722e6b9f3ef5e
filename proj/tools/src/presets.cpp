#include <map>
#include <string>

#include "mmvp/cli/app.hpp"
#include "mmvp/errors.hpp"

namespace mmvp::cli {

namespace {

const std::map<std::string, const char*>& iterate_presets() {
  static const std::map<std::string, const char*> presets{
      {"case1", R"({"id": "case1", "mode": "exponential", "a1": "1", "a2": "-1",
                   "seed": {"c": "1", "direction": 1}, "k_max": 8, "require_general_term": true})"},
      {"case2", R"({"id": "case2", "mode": "exponential", "a1": "1", "a2": "-1",
                   "seed": {"c": "1", "direction": -1}, "k_max": 8, "require_general_term": true})"},
      {"case1-pone", R"({"id": "case1-pone", "mode": "exponential", "a1": "1", "a2": "-1",
                        "seed": {"c": "1", "direction": 1}, "scheme": "p-one", "k_max": 8})"},
      {"case3", R"({"id": "case3", "mode": "polynomial", "a1": "1", "a2": "0", "Lambda": "0",
                   "seed": {"v0": "0", "v1": "1"}, "k_max": 4})"},
      {"case3-theta", R"({"id": "case3-theta", "mode": "polynomial", "a1": "1", "a2": "0", "Lambda": "0",
                         "seed": {"theta": "0.3", "k": "0.6"}, "k_max": 4})"},
  };
  return presets;
}

const std::map<std::string, const char*>& verify_presets() {
  static const std::map<std::string, const char*> presets{
      {"hyperbolic", R"({"id": "hyperbolic",
        "forms": [
          {"family": "EXP_RATIONAL", "a1": 1, "a2": -1, "c": 1},
          {"family": "SECH2", "a1": 1, "a2": -1, "c": 1},
          {"family": "EXP_RATIONAL", "a1": 1, "a2": -1, "c": -1},
          {"family": "CSCH2", "a1": 1, "a2": -1, "c": -1}],
        "samples": {"min": -2, "max": 3, "count": 25},
        "residual_tolerance": 1e-10, "equivalence_tolerance": 1e-12})"},
      {"elliptic", R"({"id": "elliptic",
        "forms": [
          {"family": "SN2", "a1": 1, "a2": 0, "theta": 0.3, "k": 0.6},
          {"family": "CN2", "a1": 1, "a2": 0, "theta": 0.3, "k": 0.6},
          {"family": "DN2", "a1": 1, "a2": 0, "theta": 0.3, "k": 0.6}],
        "samples": {"min": -10, "max": 10, "count": 25},
        "residual_tolerance": 1e-8, "equivalence_tolerance": 1e-10,
        "maclaurin": {"a1": "1", "a2": "0", "Lambda": "0", "theta": "0.3", "k": "0.6",
                      "k_max": 4, "max_degree": 10, "tolerance": 1e-9}})"},
      {"shift", R"({"id": "shift",
        "forms": [{"family": "EXP_RATIONAL", "a1": 1, "a2": -1, "c": 1}],
        "samples": {"min": -3, "max": 3, "count": 25},
        "lambda_shifts": [-0.5, -0.25, 0.25, 0.5, 0.9],
        "residual_tolerance": 1e-10})"},
      {"trig", R"({"id": "trig",
        "forms": [
          {"family": "CSC2", "a1": 1, "a2": 1, "c": 12},
          {"family": "SEC2", "a1": 1, "a2": 1, "c": -12},
          {"family": "ALGEBRAIC", "a1": 1, "a2": 0}],
        "samples": {"min": 0.5, "max": 2.5, "count": 25},
        "residual_tolerance": 1e-10, "imaginary_tolerance": 1e-12})"},
      {"zero", R"({"id": "zero", "forms": [{"family": "ZERO"}],
        "samples": {"min": -3, "max": 3, "count": 25},
        "lambda_shifts": [0.7], "residual_tolerance": 1e-10})"},
      {"corrupted", R"({"id": "corrupted",
        "forms": [
          {"family": "EXP_RATIONAL", "a1": 1, "a2": -1, "c": 1},
          {"family": "SECH2", "a1": 1, "a2": -1, "c": 1.001}],
        "equivalences": [[0, 1]],
        "samples": {"min": -3, "max": 3, "count": 25},
        "residual_tolerance": 1e-10, "equivalence_tolerance": 1e-12})"},
  };
  return presets;
}

Json field_preset(std::string_view name) {
  FieldConfig cfg;
  if (name == "constant") {
    cfg.id = "constant";
    cfg.a1 = 1;
    cfg.closed_form = ClosedForm::zero(0.7);
    cfg.grid.axis_points = 21;
    cfg.grid.t_points = 11;
  } else {
    cfg = figure_preset(name);
  }
  Json j;
  j["field"] = to_json(cfg);
  j["steps"] = {1e-2, 5e-3, 2.5e-3};
  j["residual_points"] = 10;
  j["seed"] = 20240601;
  j["min_order"] = 1.9;
  return j;
}

}  // namespace

std::vector<std::string> preset_names(std::string_view command) {
  std::vector<std::string> names;
  if (command == "iterate" || command == "adomian") {
    for (const auto& [k, v] : iterate_presets()) names.push_back(k);
  } else if (command == "verify") {
    for (const auto& [k, v] : verify_presets()) names.push_back(k);
  } else if (command == "field") {
    names = figure_preset_names();
    names.push_back("constant");
  }
  return names;
}

Json preset_config(std::string_view command, std::string_view name) {
  const std::string key(name);
  if (command == "iterate" || command == "adomian") {
    auto it = iterate_presets().find(key);
    if (it != iterate_presets().end()) return Json::parse(it->second);
  } else if (command == "verify") {
    auto it = verify_presets().find(key);
    if (it != verify_presets().end()) return Json::parse(it->second);
  } else if (command == "field") {
    auto names = preset_names("field");
    if (std::find(names.begin(), names.end(), key) != names.end()) return field_preset(name);
  }
  throw ParseError("unknown preset '" + key + "' for " + std::string(command));
}

}  // namespace mmvp::cli
