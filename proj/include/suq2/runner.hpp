#pragma once

#include <string>

#include <json.hpp>

namespace suq2::runner {

using nlohmann::json;

/// Global run parameters shared by every subcommand; serialized verbatim
/// into each report for reproducibility.
struct RunConfig {
  double q = 0.5;
  std::uint64_t seed = 1234;
  int trunc_n = 12;
  int trunc_m = 6;
  int torus_samples = 4096;
  double t_min = 1e-4, t_max = 50.0;
  int t_count = 64;

  static RunConfig from_json(const json& j);
  json to_json() const;
};

// Dispatch a subcommand. `params` carries subcommand-specific inputs.
// The returned report embeds the config, the params, a content hash, the
// results object, and a boolean "pass". Throws std::invalid_argument on
// malformed input and std::runtime_error on internal failures.
json run_command(const RunConfig& cfg, const std::string& command,
                 const json& params);

// Flatten a report into "key,value" CSV lines (tabular numeric fields).
std::string report_to_csv(const json& report);

}  // namespace suq2::runner
