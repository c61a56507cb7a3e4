#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "resex/config.hpp"
#include "resex/csv.hpp"
#include "resex/metrics.hpp"

// Scenario-driven experiment runners. Each writes one or more CSV files
// under the configured output prefix (and optional SVGs derived from the
// same tables) and returns the written paths plus headline numbers.

namespace resex {

struct RunOptions {
  std::optional<uint64_t> seed;   // overrides config / default seed
  bool svg = false;
  Evaluator evaluator = Evaluator::Analytic;
  std::optional<std::string> out;  // overrides config output prefix
};

struct RunResult {
  std::vector<std::string> files;
  std::map<std::string, double> summary;
};

// Built-in scenario for each experiment label.
ScenarioConfig default_scenario(const std::string& experiment);

// Pauli coefficient magnitudes of the two-drive DQD evolution over time.
RunResult run_dqd_coeffs(const ScenarioConfig& cfg, const RunOptions& opts = {});
// Single-drive vs ZX-composition infidelity (noiseless and under quasi-static
// exchange noise) against the exchange value.
RunResult run_dqd_fidelity_scan(const ScenarioConfig& cfg, const RunOptions& opts = {});
// Y gate on an inner chain qubit: infidelity against time and against J0.
RunResult run_chain_ygate(const ScenarioConfig& cfg, const RunOptions& opts = {});
// Simultaneous drive patterns on N = 3,5,7 chains against J0.
RunResult run_chain_simul_y(const ScenarioConfig& cfg, const RunOptions& opts = {});
// Native SWAP in a four-qubit window: fidelity curves and error words.
RunResult run_swap(const ScenarioConfig& cfg, const RunOptions& opts = {});
// Full gate report (fidelity, bound, PTM, error generator, error words).
RunResult run_report(const ScenarioConfig& cfg, const RunOptions& opts = {});

// Dispatch on cfg.experiment.
RunResult run_experiment(const ScenarioConfig& cfg, const RunOptions& opts = {});

// Gate-report serialization: one row per record with word labels,
// columns record,row_word,col_word,value_re,value_im.
RecordTable gate_report_table(const GateReport& report);

}  // namespace resex
