#pragma once

#include <string>
#include <vector>

#include "optimizer.hpp"

namespace qecost::scenarios {

struct RunOptions {
  int threads = 1;
  optimizer::GridScale grid_scale = optimizer::GridScale::normal;
};

struct OutputFile {
  std::string name; // relative file name, e.g. "ft-qft-pmin.csv"
  std::string content;
};

struct RunResult {
  std::string scenario;
  bool feasible = true;
  std::string summary_json;       // also written as <scenario>.summary.json
  std::vector<OutputFile> files;  // CSV outputs
};

struct ScenarioInfo {
  std::string name;
  std::string description;
};

// Registered scenarios in stable order.
std::vector<ScenarioInfo> list_scenarios();

// Parse a flat key=value config text and run the named scenario.
// Throws error(parse_error) with line/column info on malformed input.
RunResult run_scenario_text(const std::string& config_text, const RunOptions& options);

// Generated documentation of config keys and CSV schemas per scenario.
std::string schemas_markdown();

} // namespace qecost::scenarios
