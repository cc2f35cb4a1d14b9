#include "solsta/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace solsta {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, const std::string& prefix, const std::set<std::string>& allowed) {
  if (!obj.is_object()) throw ParseError(prefix.empty() ? "<root>" : prefix, "expected an object");
  for (const auto& [key, _] : obj.items()) {
    if (!allowed.contains(key)) throw ParseError(prefix.empty() ? key : prefix + "." + key, "unknown key");
  }
}

double get_number(const json& obj, const std::string& key, const std::string& path, double fallback) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_number()) throw ParseError(path, "expected a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) throw ParseError(path, "must be finite");
  return d;
}

std::size_t get_count(const json& obj, const std::string& key, const std::string& path, std::size_t fallback) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0) throw ParseError(path, "expected a non-negative integer");
  return v.get<std::size_t>();
}

std::string get_string(const json& obj, const std::string& key, const std::string& fallback) {
  if (!obj.contains(key)) return fallback;
  if (!obj.at(key).is_string()) throw ParseError(key, "expected a string");
  return obj.at(key).get<std::string>();
}

}  // namespace

std::string to_string(Scenario s) {
  switch (s) {
    case Scenario::fig1: return "fig1";
    case Scenario::fig2: return "fig2";
    case Scenario::fig3: return "fig3";
    case Scenario::fig4: return "fig4";
    case Scenario::fig5: return "fig5";
    case Scenario::custom: return "custom";
  }
  return "custom";
}

Scenario scenario_from_string(const std::string& s) {
  if (s == "fig1") return Scenario::fig1;
  if (s == "fig2") return Scenario::fig2;
  if (s == "fig3") return Scenario::fig3;
  if (s == "fig4") return Scenario::fig4;
  if (s == "fig5") return Scenario::fig5;
  if (s == "custom") return Scenario::custom;
  throw ParseError("scenario", "expected fig1..fig5 or custom, got '" + s + "'");
}

double GridConfig::dt_for(double t_f) const {
  if (dt) return *dt;
  return t_f <= 10.0 ? 1e-4 : 1e-3;
}

Grid1D GridConfig::grid_for(double t_f) const { return build_grid(x_half_width, n_points, dt_for(t_f)); }

PhysicalConfig RunConfig::physical() const {
  PhysicalConfig p;
  p.omega = omega;
  p.n_norm = n_norm;
  return p;
}

void RunConfig::validate() const {
  physical().validate();
  switching.validate();
  if (switching.g_base <= 0.0) throw ParseError("switching.g_base", "must be > 0");
  if (switching.a_s_amp < 0.0) throw ParseError("switching.a_s_amp", "must be >= 0");
  build_grid(grid.x_half_width, grid.n_points, grid.dt.value_or(1e-4));
  if (numerics.ode_steps < 10) throw ParseError("numerics.ode_steps", "must be >= 10");
  if (numerics.design_samples < 3) throw ParseError("numerics.design_samples", "must be >= 3");
  if (numerics.observe_every < 1) throw ParseError("numerics.observe_every", "must be >= 1");
  if (numerics.corrector_passes < 0) throw ParseError("numerics.corrector_passes", "must be >= 0");
  if (sweep.a_s_values.empty()) throw ParseError("sweep.a_s_values", "must not be empty");
  for (double v : sweep.a_s_values)
    if (!(v > 0.0)) throw ParseError("sweep.a_s_values", "entries must be > 0");
  if (output_dir.empty()) throw ParseError("output_dir", "must not be empty");
}

bool RunConfig::operator==(const RunConfig& o) const {
  return omega == o.omega && n_norm == o.n_norm && switching.g_base == o.switching.g_base &&
         switching.a_s_amp == o.switching.a_s_amp && switching.s_rate == o.switching.s_rate &&
         switching.t_f == o.switching.t_f && grid.x_half_width == o.grid.x_half_width &&
         grid.n_points == o.grid.n_points && grid.dt == o.grid.dt &&
         numerics.ode_steps == o.numerics.ode_steps && numerics.design_samples == o.numerics.design_samples &&
         numerics.observe_every == o.numerics.observe_every &&
         numerics.corrector_passes == o.numerics.corrector_passes && sweep.a_s_values == o.sweep.a_s_values &&
         scenario == o.scenario && method == o.method && output_dir == o.output_dir;
}

RunConfig parse_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("<document>", std::string("malformed JSON: ") + e.what());
  }
  reject_unknown(doc, "", {"physical", "switching", "grid", "numerics", "sweep", "scenario", "method", "output_dir"});

  RunConfig cfg;
  if (doc.contains("physical")) {
    const auto& p = doc.at("physical");
    reject_unknown(p, "physical", {"omega", "n_norm"});
    cfg.omega = get_number(p, "omega", "physical.omega", cfg.omega);
    cfg.n_norm = get_number(p, "n_norm", "physical.n_norm", cfg.n_norm);
  }
  if (doc.contains("switching")) {
    const auto& s = doc.at("switching");
    reject_unknown(s, "switching", {"g_base", "a_s_amp", "s_rate", "t_f"});
    cfg.switching.g_base = get_number(s, "g_base", "switching.g_base", cfg.switching.g_base);
    cfg.switching.a_s_amp = get_number(s, "a_s_amp", "switching.a_s_amp", cfg.switching.a_s_amp);
    cfg.switching.s_rate = get_number(s, "s_rate", "switching.s_rate", cfg.switching.s_rate);
    cfg.switching.t_f = get_number(s, "t_f", "switching.t_f", cfg.switching.t_f);
  }
  if (doc.contains("grid")) {
    const auto& g = doc.at("grid");
    reject_unknown(g, "grid", {"x_half_width", "n_points", "dt"});
    cfg.grid.x_half_width = get_number(g, "x_half_width", "grid.x_half_width", cfg.grid.x_half_width);
    cfg.grid.n_points = get_count(g, "n_points", "grid.n_points", cfg.grid.n_points);
    if (g.contains("dt")) {
      cfg.grid.dt = get_number(g, "dt", "grid.dt", 0.0);
      if (!(*cfg.grid.dt > 0.0)) throw ParseError("grid.dt", "must be > 0");
    }
  }
  if (doc.contains("numerics")) {
    const auto& n = doc.at("numerics");
    reject_unknown(n, "numerics", {"ode_steps", "design_samples", "observe_every", "corrector_passes"});
    cfg.numerics.ode_steps = get_count(n, "ode_steps", "numerics.ode_steps", cfg.numerics.ode_steps);
    cfg.numerics.design_samples = get_count(n, "design_samples", "numerics.design_samples", cfg.numerics.design_samples);
    cfg.numerics.observe_every = get_count(n, "observe_every", "numerics.observe_every", cfg.numerics.observe_every);
    cfg.numerics.corrector_passes = static_cast<int>(
        get_count(n, "corrector_passes", "numerics.corrector_passes", static_cast<std::size_t>(cfg.numerics.corrector_passes)));
  }
  if (doc.contains("sweep")) {
    const auto& s = doc.at("sweep");
    reject_unknown(s, "sweep", {"a_s_values"});
    if (s.contains("a_s_values")) {
      const auto& arr = s.at("a_s_values");
      if (!arr.is_array()) throw ParseError("sweep.a_s_values", "expected an array of numbers");
      cfg.sweep.a_s_values.clear();
      for (const auto& v : arr) {
        if (!v.is_number()) throw ParseError("sweep.a_s_values", "expected an array of numbers");
        cfg.sweep.a_s_values.push_back(v.get<double>());
      }
    }
  }
  cfg.scenario = scenario_from_string(get_string(doc, "scenario", to_string(cfg.scenario)));
  cfg.method = reference_method_from_string(get_string(doc, "method", to_string(cfg.method)));
  cfg.output_dir = get_string(doc, "output_dir", cfg.output_dir);

  cfg.validate();
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string to_json_text(const RunConfig& cfg) {
  json doc;
  doc["physical"] = {{"omega", cfg.omega}, {"n_norm", cfg.n_norm}};
  doc["switching"] = {{"g_base", cfg.switching.g_base},
                      {"a_s_amp", cfg.switching.a_s_amp},
                      {"s_rate", cfg.switching.s_rate},
                      {"t_f", cfg.switching.t_f}};
  doc["grid"] = {{"x_half_width", cfg.grid.x_half_width}, {"n_points", cfg.grid.n_points}};
  if (cfg.grid.dt) doc["grid"]["dt"] = *cfg.grid.dt;
  doc["numerics"] = {{"ode_steps", cfg.numerics.ode_steps},
                     {"design_samples", cfg.numerics.design_samples},
                     {"observe_every", cfg.numerics.observe_every},
                     {"corrector_passes", cfg.numerics.corrector_passes}};
  doc["sweep"] = {{"a_s_values", cfg.sweep.a_s_values}};
  doc["scenario"] = to_string(cfg.scenario);
  doc["method"] = to_string(cfg.method);
  doc["output_dir"] = cfg.output_dir;
  return doc.dump(2);
}

}  // namespace solsta
