#include "resex/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "resex/csv.hpp"

namespace resex {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  size_t b = s.find_last_not_of(" \t\r");
  return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
}

const std::map<std::string, double> kUnits = {
    {"Hz", 1.0},   {"kHz", 1e3},  {"MHz", 1e6}, {"GHz", 1e9},
    {"s", 1.0},    {"ms", 1e-3},  {"us", 1e-6}, {"ns", 1e-9},
    {"rad", 1.0},  {"pi", M_PI},
};

bool parse_bool(const std::string& v, std::vector<std::string>& errors, const std::string& key) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  errors.push_back("key '" + key + "': expected boolean, got '" + v + "'");
  return false;
}

}  // namespace

double parse_value(const std::string& text) {
  const std::string t = trim(text);
  size_t pos = 0;
  double v;
  try {
    v = std::stod(t, &pos);
  } catch (const std::exception&) {
    throw ConfigError("cannot parse numeric value '" + t + "'");
  }
  std::string suffix = trim(t.substr(pos));
  if (suffix.empty()) return v;
  auto it = kUnits.find(suffix);
  if (it == kUnits.end()) throw ConfigError("unknown unit suffix '" + suffix + "' in '" + t + "'");
  return v * it->second;
}

namespace {

ScenarioConfig parse_json_config(const std::string& content) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(content);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("JSON parse error: ") + e.what());
  }
  ScenarioConfig cfg;
  std::vector<std::string> errors;
  auto as_value = [&errors](const nlohmann::json& v, const std::string& key) -> double {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) {
      try {
        return parse_value(v.get<std::string>());
      } catch (const ConfigError& e) {
        errors.push_back(std::string(e.what()) + " (key '" + key + "')");
        return 0.0;
      }
    }
    errors.push_back("key '" + key + "': expected number or numeric string");
    return 0.0;
  };
  if (j.contains("experiment")) cfg.experiment = j["experiment"].get<std::string>();
  if (j.contains("out")) cfg.out = j["out"].get<std::string>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<uint64_t>();
  if (j.contains("params"))
    for (auto& [k, v] : j["params"].items()) {
      if (v.is_string() && !v.get<std::string>().empty() &&
          !std::isdigit(static_cast<unsigned char>(v.get<std::string>()[0])) &&
          v.get<std::string>()[0] != '-' && v.get<std::string>()[0] != '+' &&
          v.get<std::string>()[0] != '.') {
        cfg.strings[k] = v.get<std::string>();
      } else {
        cfg.params[k] = as_value(v, k);
      }
    }
  if (j.contains("sweep")) {
    SweepSpec s;
    auto& js = j["sweep"];
    if (js.contains("field")) s.field = js["field"].get<std::string>();
    if (js.contains("start")) s.start = as_value(js["start"], "sweep.start");
    if (js.contains("stop")) s.stop = as_value(js["stop"], "sweep.stop");
    if (js.contains("points")) s.points = js["points"].get<int>();
    if (js.contains("scale")) s.log_scale = js["scale"].get<std::string>() == "log";
    cfg.sweep = s;
  }
  if (j.contains("noise")) {
    NoiseSpec n;
    auto& jn = j["noise"];
    if (jn.contains("sigma_rel")) n.sigma_rel = as_value(jn["sigma_rel"], "noise.sigma_rel");
    if (jn.contains("samples")) n.samples = jn["samples"].get<int>();
    if (jn.contains("seed")) n.seed = jn["seed"].get<uint64_t>();
    if (jn.contains("correlated")) n.correlated_bonds = jn["correlated"].get<bool>();
    cfg.noise = n;
  }
  if (!errors.empty()) {
    std::string msg = "config validation failed:";
    for (const auto& e : errors) msg += "\n  - " + e;
    throw ConfigError(msg);
  }
  return cfg;
}

}  // namespace

ScenarioConfig parse_config(const std::string& content) {
  // JSON alternative encoding of the same schema
  for (char c : content) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_json_config(content);
    break;
  }

  ScenarioConfig cfg;
  std::vector<std::string> errors;
  std::string section;
  std::istringstream in(content);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    const size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') {
        errors.push_back("line " + std::to_string(lineno) + ": malformed section header '" + line + "'");
        continue;
      }
      section = trim(line.substr(1, line.size() - 2));
      if (section != "params" && section != "sweep" && section != "noise")
        errors.push_back("line " + std::to_string(lineno) + ": unknown section [" + section + "]");
      continue;
    }
    const size_t eq = line.find('=');
    if (eq == std::string::npos) {
      errors.push_back("line " + std::to_string(lineno) + ": expected key = value, got '" + line + "'");
      continue;
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    auto numeric = [&](const std::string& k, const std::string& v) -> std::optional<double> {
      try {
        return parse_value(v);
      } catch (const ConfigError& e) {
        errors.push_back("line " + std::to_string(lineno) + ", key '" + k + "': " + e.what());
        return std::nullopt;
      }
    };
    if (section.empty()) {
      if (key == "experiment") cfg.experiment = val;
      else if (key == "out") cfg.out = val;
      else if (key == "seed") {
        try {
          cfg.seed = std::stoull(val);
        } catch (const std::exception&) {
          errors.push_back("line " + std::to_string(lineno) + ": seed must be an unsigned integer");
        }
      } else errors.push_back("line " + std::to_string(lineno) + ": unknown top-level key '" + key + "'");
    } else if (section == "params") {
      const bool looks_numeric = !val.empty() && (std::isdigit(static_cast<unsigned char>(val[0])) ||
                                                  val[0] == '-' || val[0] == '+' || val[0] == '.');
      if (looks_numeric) {
        if (auto v = numeric(key, val)) cfg.params[key] = *v;
      } else {
        cfg.strings[key] = val;
      }
    } else if (section == "sweep") {
      if (!cfg.sweep) cfg.sweep = SweepSpec{};
      if (key == "field") cfg.sweep->field = val;
      else if (key == "start") { if (auto v = numeric(key, val)) cfg.sweep->start = *v; }
      else if (key == "stop") { if (auto v = numeric(key, val)) cfg.sweep->stop = *v; }
      else if (key == "points") { if (auto v = numeric(key, val)) cfg.sweep->points = static_cast<int>(*v); }
      else if (key == "scale") {
        if (val == "log") cfg.sweep->log_scale = true;
        else if (val == "linear") cfg.sweep->log_scale = false;
        else errors.push_back("line " + std::to_string(lineno) + ": scale must be linear or log");
      } else errors.push_back("line " + std::to_string(lineno) + ": unknown sweep key '" + key + "'");
    } else if (section == "noise") {
      if (!cfg.noise) cfg.noise = NoiseSpec{};
      if (key == "sigma_rel") { if (auto v = numeric(key, val)) cfg.noise->sigma_rel = *v; }
      else if (key == "samples") { if (auto v = numeric(key, val)) cfg.noise->samples = static_cast<int>(*v); }
      else if (key == "seed") {
        try {
          cfg.noise->seed = std::stoull(val);
        } catch (const std::exception&) {
          errors.push_back("line " + std::to_string(lineno) + ": noise seed must be an unsigned integer");
        }
      } else if (key == "correlated") cfg.noise->correlated_bonds = parse_bool(val, errors, key);
      else errors.push_back("line " + std::to_string(lineno) + ": unknown noise key '" + key + "'");
    }
  }
  if (cfg.sweep) {
    if (cfg.sweep->points < 2) errors.push_back("sweep: points must be >= 2");
    if (cfg.sweep->field.empty()) errors.push_back("sweep: field is required");
    if (cfg.sweep->log_scale && (cfg.sweep->start <= 0 || cfg.sweep->stop <= 0))
      errors.push_back("sweep: log scale requires positive start/stop");
  }
  if (cfg.noise) {
    if (cfg.noise->samples < 1) errors.push_back("noise: samples must be >= 1");
    if (cfg.noise->sigma_rel < 0) errors.push_back("noise: sigma_rel must be >= 0");
  }
  if (!errors.empty()) {
    std::string msg = "config validation failed:";
    for (const auto& e : errors) msg += "\n  - " + e;
    throw ConfigError(msg);
  }
  return cfg;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const ScenarioConfig& cfg) {
  std::string out;
  out += "experiment = " + cfg.experiment + "\n";
  out += "out = " + cfg.out + "\n";
  if (cfg.seed) out += "seed = " + std::to_string(*cfg.seed) + "\n";
  if (!cfg.params.empty() || !cfg.strings.empty()) {
    out += "\n[params]\n";
    for (const auto& [k, v] : cfg.params) out += k + " = " + format_g17(v) + "\n";
    for (const auto& [k, v] : cfg.strings) out += k + " = " + v + "\n";
  }
  if (cfg.sweep) {
    out += "\n[sweep]\n";
    out += "field = " + cfg.sweep->field + "\n";
    out += "start = " + format_g17(cfg.sweep->start) + "\n";
    out += "stop = " + format_g17(cfg.sweep->stop) + "\n";
    out += "points = " + std::to_string(cfg.sweep->points) + "\n";
    out += std::string("scale = ") + (cfg.sweep->log_scale ? "log" : "linear") + "\n";
  }
  if (cfg.noise) {
    out += "\n[noise]\n";
    out += "sigma_rel = " + format_g17(cfg.noise->sigma_rel) + "\n";
    out += "samples = " + std::to_string(cfg.noise->samples) + "\n";
    out += "seed = " + std::to_string(cfg.noise->seed) + "\n";
    out += std::string("correlated = ") + (cfg.noise->correlated_bonds ? "true" : "false") + "\n";
  }
  return out;
}

bool operator==(const SweepSpec& a, const SweepSpec& b) {
  return a.field == b.field && a.start == b.start && a.stop == b.stop && a.points == b.points &&
         a.log_scale == b.log_scale;
}

bool operator==(const ScenarioConfig& a, const ScenarioConfig& b) {
  auto noise_eq = [](const std::optional<NoiseSpec>& x, const std::optional<NoiseSpec>& y) {
    if (x.has_value() != y.has_value()) return false;
    if (!x) return true;
    return x->sigma_rel == y->sigma_rel && x->samples == y->samples && x->seed == y->seed &&
           x->correlated_bonds == y->correlated_bonds;
  };
  return a.experiment == b.experiment && a.out == b.out && a.seed == b.seed &&
         a.params == b.params && a.strings == b.strings && a.sweep == b.sweep &&
         noise_eq(a.noise, b.noise);
}

}  // namespace resex
