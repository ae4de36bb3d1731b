// Config-driven experiment runner.  A JSON config selects one of four kinds:
//
//   verify      randomized identity suites, report + manifest
//   evolve-nls  wave-side trajectory with monitors and snapshots
//   evolve-qhd  fluid-side trajectory with monitors and snapshots
//   compare     joint run, wave mapped through the Madelung transform and
//               compared against the fluid trajectory at matched times
//
// Run directory layout: manifest.json, report.txt, monitors/*.csv (one per
// monitor, columns time,value), fields/*.csv (snapshots).  Exit codes:
// 0 pass, 1 identity failure, 2 config error, 3 runtime failure.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace madlab {

inline constexpr const char* kVersion = "0.1.0";

// tolerance on the final Madelung residual of a compare run
inline constexpr double kCompareTol = 1e-4;

// schema violations; the message names the offending key path
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunOutcome {
  int exit_code = 0;
  std::string summary;  // human-readable, printed by the CLI
};

RunOutcome run_experiment(const std::string& config_path,
                          const std::string& out_dir_override = {},
                          std::optional<std::uint64_t> seed_override = {},
                          std::optional<double> tolerance_scale_override = {});

RunOutcome report_run(const std::string& run_dir, bool gnuplot = false);

}  // namespace madlab
