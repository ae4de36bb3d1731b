// Command line front end: `madlab run <config>` executes one experiment into
// a run directory, `madlab report <dir>` summarizes an existing one.

#include <cstdio>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "madlab/experiment.hpp"

int main(int argc, char** argv) {
  CLI::App app{"spectral laboratory for the wave/fluid correspondence"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<double> tolerance_scale;
  auto* run = app.add_subcommand("run", "execute an experiment config");
  run->add_option("config", config_path, "JSON config file")->required();
  run->add_option("--out-dir", out_dir, "run directory (default: <config stem>-out)");
  run->add_option("--seed", seed, "override experiment.seed");
  run->add_option("--tolerance-scale", tolerance_scale,
                  "multiply all tolerances (debugging; reports stay raw)");

  std::string run_dir;
  bool gnuplot = false;
  auto* report = app.add_subcommand("report", "summarize a run directory");
  report->add_option("dir", run_dir, "run directory")->required();
  report->add_flag("--gnuplot", gnuplot, "emit space-separated .dat files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    madlab::RunOutcome outcome;
    if (run->parsed())
      outcome = madlab::run_experiment(config_path, out_dir, seed, tolerance_scale);
    else
      outcome = madlab::report_run(run_dir, gnuplot);
    std::fputs(outcome.summary.c_str(), stdout);
    return outcome.exit_code;
  } catch (const madlab::ConfigError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
