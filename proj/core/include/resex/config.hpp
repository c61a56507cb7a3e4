#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "resex/noise.hpp"

// Scenario configuration: a flat, human-editable key-value format with
// sections ([params], [sweep], [noise]), or the same schema as JSON.
// Numeric values accept unit suffixes; frequency-like units are angular
// (1 MHz = 1e6 rad/s), times are seconds (s, ms, us, ns).

namespace resex {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SweepSpec {
  std::string field;
  double start = 0.0;
  double stop = 0.0;
  int points = 2;
  bool log_scale = false;
};

struct ScenarioConfig {
  std::string experiment;
  std::string out = "resex";
  std::optional<uint64_t> seed;
  std::map<std::string, double> params;        // numeric overrides, e.g. "by1[1]", "j[0]", "n"
  std::map<std::string, std::string> strings;  // string options, e.g. "gate"
  std::optional<SweepSpec> sweep;
  std::optional<NoiseSpec> noise;
};

// Parses the key-value format, or JSON when the content starts with '{'.
// All validation failures are collected and reported together.
ScenarioConfig parse_config(const std::string& content);
ScenarioConfig load_config(const std::string& path);

// Canonical key-value serialization; parse(serialize(parse(x))) == parse(x).
std::string serialize_config(const ScenarioConfig& cfg);

// Numeric literal with optional unit suffix (Hz/kHz/MHz/GHz angular, s/ms/us/ns).
double parse_value(const std::string& text);

bool operator==(const SweepSpec& a, const SweepSpec& b);
bool operator==(const ScenarioConfig& a, const ScenarioConfig& b);

}  // namespace resex
