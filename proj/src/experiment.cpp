#include "madlab/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "madlab/dynamics.hpp"
#include "madlab/field_io.hpp"
#include "madlab/hamiltonians.hpp"
#include "madlab/madelung.hpp"
#include "madlab/states.hpp"
#include "madlab/symmetry.hpp"
#include "madlab/verify.hpp"

namespace madlab {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

[[noreturn]] void config_fail(const std::string& path, const std::string& what) {
  throw ConfigError("config error at " + path + ": " + what);
}

const json& require_key(const json& j, const std::string& path, const char* key) {
  if (!j.is_object() || !j.contains(key))
    config_fail(path + "." + key, "missing required key");
  return j.at(key);
}

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) config_fail(path, "expected a number");
  return j.get<double>();
}

std::string as_string(const json& j, const std::string& path) {
  if (!j.is_string()) config_fail(path, "expected a string");
  return j.get<std::string>();
}

// ---- config model ----------------------------------------------------------

struct SymmetryElementSpec {
  std::string name;
  json velocity_modes;  // list of mode rows
  json phase_modes;
};

struct Config {
  std::string kind;
  std::uint64_t seed = 0;
  double tolerance_scale = 1.0;
  std::optional<GridSpec> grid;
  std::string model_name = "gp";
  std::string scheme = "strang";
  double dt = 1e-3;
  double horizon = 0.5;
  std::size_t snapshot_stride = 0;
  json density_modes;
  json phase_modes;
  std::vector<SymmetryElementSpec> symmetry_elements;
  json raw;  // echoed into the manifest
};

GridSpec parse_grid(const json& j, const std::string& path) {
  const json& n = j.contains("n") ? j.at("n")
                                  : (j.contains("N") ? j.at("N") : json());
  if (n.is_null()) config_fail(path + ".n", "missing required key");
  if (!n.is_array() || n.empty() || n.size() > 2)
    config_fail(path + ".n", "expected an array of 1 or 2 node counts");
  std::vector<double> length(n.size(), 2.0 * M_PI);
  if (j.contains("length")) {
    const json& l = j.at("length");
    if (!l.is_array() || l.size() != n.size())
      config_fail(path + ".length", "expected an array matching n");
    for (std::size_t i = 0; i < l.size(); ++i)
      length[i] = as_number(l[i], path + ".length");
  }
  try {
    if (n.size() == 1) return GridSpec(n[0].get<int>(), length[0]);
    return GridSpec(n[0].get<int>(), n[1].get<int>(), length[0], length[1]);
  } catch (const std::invalid_argument& e) {
    config_fail(path, e.what());
  }
}

Config parse_config(const json& j) {
  Config c;
  c.raw = j;
  const std::string root = "experiment";
  const json& exp = require_key(j, "", "experiment");
  c.kind = as_string(require_key(exp, root, "kind"), root + ".kind");
  if (c.kind != "verify" && c.kind != "evolve-nls" && c.kind != "evolve-qhd" &&
      c.kind != "compare")
    config_fail(root + ".kind",
                "expected one of verify, evolve-nls, evolve-qhd, compare");
  if (exp.contains("seed")) {
    if (!exp.at("seed").is_number_unsigned())
      config_fail(root + ".seed", "expected a non-negative integer");
    c.seed = exp.at("seed").get<std::uint64_t>();
  }
  if (exp.contains("tolerance_scale")) {
    c.tolerance_scale = as_number(exp.at("tolerance_scale"),
                                  root + ".tolerance_scale");
    if (!(c.tolerance_scale > 0.0))
      config_fail(root + ".tolerance_scale", "must be positive");
  }

  if (j.contains("grid")) c.grid = parse_grid(j.at("grid"), "grid");

  if (j.contains("model"))
    c.model_name = as_string(require_key(j.at("model"), "model", "name"),
                             "model.name");

  if (j.contains("integrator")) {
    const json& integ = j.at("integrator");
    if (integ.contains("scheme"))
      c.scheme = as_string(integ.at("scheme"), "integrator.scheme");
    if (integ.contains("dt")) c.dt = as_number(integ.at("dt"), "integrator.dt");
    if (integ.contains("horizon"))
      c.horizon = as_number(integ.at("horizon"), "integrator.horizon");
    if (integ.contains("snapshot_stride")) {
      if (!integ.at("snapshot_stride").is_number_unsigned())
        config_fail("integrator.snapshot_stride", "expected a non-negative integer");
      c.snapshot_stride = integ.at("snapshot_stride").get<std::size_t>();
    }
    if (!(c.dt > 0.0)) config_fail("integrator.dt", "must be positive");
    if (!(c.horizon > 0.0)) config_fail("integrator.horizon", "must be positive");
  }

  if (j.contains("initial")) {
    const json& init = j.at("initial");
    if (init.contains("density_modes")) c.density_modes = init.at("density_modes");
    if (init.contains("phase_modes")) c.phase_modes = init.at("phase_modes");
  }

  if (j.contains("symmetry_elements")) {
    const json& els = j.at("symmetry_elements");
    if (!els.is_array()) config_fail("symmetry_elements", "expected an array");
    for (std::size_t i = 0; i < els.size(); ++i) {
      std::string path = "symmetry_elements[" + std::to_string(i) + "]";
      SymmetryElementSpec s;
      s.name = as_string(require_key(els[i], path, "name"), path + ".name");
      if (els[i].contains("velocity_modes")) s.velocity_modes = els[i].at("velocity_modes");
      if (els[i].contains("phase_modes")) s.phase_modes = els[i].at("phase_modes");
      c.symmetry_elements.push_back(std::move(s));
    }
  }
  return c;
}

// mode rows [k, a, b] in 1D and [k0, k1, a, b] in 2D build
// a cos(k.x') + b sin(k.x') with x' the angle coordinates 2 pi x / L
ScalarField field_from_modes(const GridSpec& g, const json& modes,
                             const std::string& path) {
  ScalarField out(g);
  if (modes.is_null()) return out;
  if (!modes.is_array()) config_fail(path, "expected an array of mode rows");
  const std::size_t width = g.dim == 2 ? 4 : 3;
  for (std::size_t r = 0; r < modes.size(); ++r) {
    const json& row = modes[r];
    std::string rpath = path + "[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != width)
      config_fail(rpath, g.dim == 2 ? "expected [k0, k1, a, b]" : "expected [k, a, b]");
    double k0 = as_number(row[0], rpath);
    double k1 = g.dim == 2 ? as_number(row[1], rpath) : 0.0;
    double a = as_number(row[width - 2], rpath);
    double b = as_number(row[width - 1], rpath);
    if (k0 != std::round(k0) || k1 != std::round(k1))
      config_fail(rpath, "mode numbers must be integers");
    for (std::size_t i = 0; i < out.v.size(); ++i) {
      double phase = 2.0 * M_PI * k0 * g.coord(0, i) / g.length[0];
      if (g.dim == 2) phase += 2.0 * M_PI * k1 * g.coord(1, i) / g.length[1];
      out.v[i] += a * std::cos(phase) + b * std::sin(phase);
    }
  }
  return out;
}

WaveFunction initial_wave(const Config& c, const GridSpec& g) {
  if (c.density_modes.is_null())
    config_fail("initial.density_modes", "missing required key");
  ScalarField rho = field_from_modes(g, c.density_modes, "initial.density_modes");
  ScalarField tau = field_from_modes(g, c.phase_modes, "initial.phase_modes");
  for (double r : rho.v)
    if (!(r > 0.0)) config_fail("initial.density_modes", "density must stay positive");
  return from_polar(rho, tau);
}

AlgebraElement build_element(const GridSpec& g, const SymmetryElementSpec& s,
                             const std::string& path) {
  ScalarField alpha = field_from_modes(g, s.phase_modes, path + ".phase_modes");
  VectorField v(g);
  if (!s.velocity_modes.is_null()) {
    if (g.dim == 1) {
      ScalarField c0 = field_from_modes(g, s.velocity_modes, path + ".velocity_modes");
      v = from_components(c0);
    } else {
      // 2D velocity: an array of two mode lists, one per component
      if (!s.velocity_modes.is_array() || s.velocity_modes.size() != 2)
        config_fail(path + ".velocity_modes",
                    "expected [modes_component0, modes_component1] in 2D");
      ScalarField c0 = field_from_modes(g, s.velocity_modes[0],
                                        path + ".velocity_modes[0]");
      ScalarField c1 = field_from_modes(g, s.velocity_modes[1],
                                        path + ".velocity_modes[1]");
      v = from_components(c0, c1);
    }
  }
  return AlgebraElement(std::move(v), std::move(alpha));
}

// ---- artifacts -------------------------------------------------------------

struct RunDir {
  fs::path root;
  explicit RunDir(const std::string& dir) : root(dir) {
    fs::create_directories(root / "monitors");
    fs::create_directories(root / "fields");
  }
  std::string path(const std::string& rel) const { return (root / rel).string(); }
};

void write_manifest(const RunDir& dir, const json& manifest) {
  std::ofstream os(dir.path("manifest.json"));
  if (!os) throw std::runtime_error("cannot write manifest.json");
  os << manifest.dump(2) << "\n";
}

void write_report(const RunDir& dir, const std::string& text) {
  std::ofstream os(dir.path("report.txt"));
  if (!os) throw std::runtime_error("cannot write report.txt");
  os << text;
}

template <typename State>
void write_monitor_files(const RunDir& dir, const TrajectoryRecord<State>& rec,
                         const std::string& prefix) {
  for (std::size_t m = 0; m < rec.monitor_names.size(); ++m) {
    std::ofstream os(dir.path("monitors/" + prefix + rec.monitor_names[m] + ".csv"));
    write_series_csv(os, rec.times, {rec.monitor_names[m]}, {rec.monitor_series[m]});
  }
}

json trajectory_manifest(const json& config_echo, const Config& c) {
  json m;
  m["version"] = kVersion;
  m["kind"] = c.kind;
  m["seed"] = c.seed;
  m["tolerance_scale"] = c.tolerance_scale;
  m["config"] = config_echo;
  m["failed"] = false;
  m["failure_reason"] = "";
  return m;
}

std::string snapshot_name(const std::string& stem, std::size_t index) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s-%04zu.csv", stem.c_str(), index);
  return buf;
}

// drift of a monitor series relative to max(1, |initial|)
double series_drift(const std::vector<double>& s) {
  double d = 0.0;
  for (double x : s) d = std::max(d, std::abs(x - s.front()));
  return d / std::max(1.0, std::abs(s.front()));
}

// ---- experiment kinds ------------------------------------------------------

RunOutcome run_verify(const Config& c, const RunDir& dir) {
  // the suite tolerances certify specific pinned grids; a grid section, if
  // present, must name the primary one so configs cannot silently drift
  if (c.grid) {
    GridSpec pinned(64, 2.0 * M_PI);
    if (!(*c.grid == pinned))
      config_fail("grid", "verify suites are pinned to 1D n=64, length 2*pi");
  }

  std::vector<CheckResult> checks = verify_suites(c.seed, c.tolerance_scale);
  bool all_pass = true;
  std::ostringstream report;
  report << "identity verification, seed " << c.seed << "\n\n";
  for (const auto& r : checks) {
    all_pass = all_pass && r.pass;
    report << format_check_line(r) << "\n";
  }
  report << "\n" << (all_pass ? "ALL PASS" : "FAILURES PRESENT") << "\n";

  json manifest = trajectory_manifest(c.raw, c);
  manifest["pass"] = all_pass;
  json jchecks = json::array();
  for (const auto& r : checks) {
    json jr;
    jr["name"] = r.name;
    jr["samples"] = r.samples;
    jr["max_residual"] = r.max_residual;
    jr["min_residual"] = r.min_residual;
    jr["tolerance"] = r.tolerance;
    jr["pass"] = r.pass;
    if (!r.detail.empty()) jr["detail"] = r.detail;
    jchecks.push_back(std::move(jr));
  }
  manifest["checks"] = std::move(jchecks);
  write_manifest(dir, manifest);
  write_report(dir, report.str());
  return {all_pass ? 0 : 1, report.str()};
}

RunOutcome run_evolve_nls(const Config& c, const RunDir& dir) {
  if (!c.grid) config_fail("grid", "missing required section");
  const GridSpec& g = *c.grid;
  NonlinearityModel model = model_by_name(c.model_name);
  WaveFunction w0 = initial_wave(c, g);

  std::vector<Monitor<WaveFunction>> monitors = {
      {"energy", [model](const WaveFunction& y) { return hamiltonian_nls(y, model); }},
      {"mass", [](const WaveFunction& y) { return integrate(density(y)); }},
  };
  for (std::size_t i = 0; i < c.symmetry_elements.size(); ++i) {
    AlgebraElement xi = build_element(g, c.symmetry_elements[i],
                                      "symmetry_elements[" + std::to_string(i) + "]");
    monitors.push_back({"moment-" + c.symmetry_elements[i].name,
                        [xi](const WaveFunction& y) { return moment(xi, y); }});
  }

  TrajectoryRecord<WaveFunction> rec;
  if (c.scheme == "strang") {
    auto step = [&](const WaveFunction& y, double h) {
      return step_strang_nls(y, model, h);
    };
    rec = evolve(w0, step, c.dt, c.horizon, monitors, c.snapshot_stride);
  } else if (c.scheme == "rk4") {
    auto step = [&](const WaveFunction& y, double h) {
      return step_rk4(y, [&](const WaveFunction& z) { return nls_rhs(z, model); }, h);
    };
    rec = evolve(w0, step, c.dt, c.horizon, monitors, c.snapshot_stride);
  } else {
    config_fail("integrator.scheme", "expected strang or rk4");
  }

  write_monitor_files(dir, rec, "");
  for (std::size_t s = 0; s < rec.snapshots.size(); ++s)
    save_complex_csv(dir.path("fields/" + snapshot_name("psi", s)),
                     rec.snapshots[s].psi, "psi");

  json manifest = trajectory_manifest(c.raw, c);
  manifest["failed"] = rec.failed;
  manifest["failure_reason"] = rec.failure_reason;
  if (rec.failed) manifest["failure_time"] = rec.failure_time;
  manifest["snapshot_times"] = rec.snapshot_times;
  json drifts;
  for (std::size_t m = 0; m < rec.monitor_names.size(); ++m)
    drifts[rec.monitor_names[m]] = series_drift(rec.monitor_series[m]);
  manifest["monitor_drifts"] = drifts;
  manifest["pass"] = !rec.failed;

  std::ostringstream report;
  report << "evolve-nls " << c.model_name << " scheme " << c.scheme << " dt " << c.dt
         << " horizon " << c.horizon << "\n";
  if (rec.failed)
    report << "FAILED at t=" << rec.failure_time << ": " << rec.failure_reason << "\n";
  for (std::size_t m = 0; m < rec.monitor_names.size(); ++m)
    report << "  drift " << rec.monitor_names[m] << " "
           << series_drift(rec.monitor_series[m]) << "\n";
  write_manifest(dir, manifest);
  write_report(dir, report.str());
  return {rec.failed ? 3 : 0, report.str()};
}

RunOutcome run_evolve_qhd(const Config& c, const RunDir& dir) {
  if (!c.grid) config_fail("grid", "missing required section");
  const GridSpec& g = *c.grid;
  if (c.scheme != "rk4" && c.scheme != "strang")
    config_fail("integrator.scheme", "expected strang or rk4");
  NonlinearityModel model = model_by_name(c.model_name);
  FluidState s0 = madelung(initial_wave(c, g));

  std::vector<Monitor<FluidState>> monitors = {
      {"energy", [model](const FluidState& y) { return hamiltonian_cf(y, model); }},
      {"mass", [](const FluidState& y) { return integrate(y.rho); }},
  };
  for (std::size_t i = 0; i < c.symmetry_elements.size(); ++i) {
    AlgebraElement xi = build_element(g, c.symmetry_elements[i],
                                      "symmetry_elements[" + std::to_string(i) + "]");
    monitors.push_back({"moment-" + c.symmetry_elements[i].name,
                        [xi](const FluidState& y) { return pairing(y, xi); }});
  }

  auto step = [&](const FluidState& y, double h) {
    return step_rk4(y, [&](const FluidState& z) { return qhd_rhs(z, model); }, h);
  };
  TrajectoryRecord<FluidState> rec =
      evolve(s0, step, c.dt, c.horizon, monitors, c.snapshot_stride);

  write_monitor_files(dir, rec, "");
  for (std::size_t s = 0; s < rec.snapshots.size(); ++s) {
    save_vector_csv(dir.path("fields/" + snapshot_name("mu", s)),
                    rec.snapshots[s].mu, "mu");
    save_scalar_csv(dir.path("fields/" + snapshot_name("rho", s)),
                    rec.snapshots[s].rho, "rho");
  }

  json manifest = trajectory_manifest(c.raw, c);
  manifest["failed"] = rec.failed;
  manifest["failure_reason"] = rec.failure_reason;
  if (rec.failed) manifest["failure_time"] = rec.failure_time;
  manifest["snapshot_times"] = rec.snapshot_times;
  json drifts;
  for (std::size_t m = 0; m < rec.monitor_names.size(); ++m)
    drifts[rec.monitor_names[m]] = series_drift(rec.monitor_series[m]);
  manifest["monitor_drifts"] = drifts;
  manifest["pass"] = !rec.failed;

  std::ostringstream report;
  report << "evolve-qhd " << c.model_name << " rk4 dt " << c.dt << " horizon "
         << c.horizon << "\n";
  if (rec.failed)
    report << "FAILED at t=" << rec.failure_time << ": " << rec.failure_reason << "\n";
  for (std::size_t m = 0; m < rec.monitor_names.size(); ++m)
    report << "  drift " << rec.monitor_names[m] << " "
           << series_drift(rec.monitor_series[m]) << "\n";
  write_manifest(dir, manifest);
  write_report(dir, report.str());
  return {rec.failed ? 3 : 0, report.str()};
}

RunOutcome run_compare(const Config& c, const RunDir& dir) {
  if (!c.grid) config_fail("grid", "missing required section");
  const GridSpec& g = *c.grid;
  NonlinearityModel model = model_by_name(c.model_name);
  WaveFunction w0 = initial_wave(c, g);
  FluidState s0 = madelung(w0);

  const long long nsteps = std::llround(c.horizon / c.dt);
  if (nsteps < 1 ||
      std::abs(nsteps * c.dt - c.horizon) > 1e-9 * std::max(1.0, c.horizon))
    config_fail("integrator.horizon", "must be a whole number of steps");

  json manifest = trajectory_manifest(c.raw, c);
  std::ostringstream report;
  report << "compare " << c.model_name << " nls/" << c.scheme << " vs qhd/rk4 dt "
         << c.dt << " horizon " << c.horizon << "\n";

  // lockstep integration with the Madelung residual sampled every step
  std::vector<double> times{0.0};
  std::vector<double> residuals{fluid_rel_l2_distance(madelung(w0), s0)};
  std::vector<double> wave_energy{hamiltonian_nls(w0, model)};
  std::vector<double> fluid_energy{hamiltonian_cf(s0, model)};

  WaveFunction w = w0;
  FluidState s = s0;
  bool failed = false;
  double failure_time = 0.0;
  std::string failure_reason;
  for (long long k = 1; k <= nsteps && !failed; ++k) {
    double t = k * c.dt;
    try {
      if (c.scheme == "strang")
        w = step_strang_nls(w, model, c.dt);
      else if (c.scheme == "rk4")
        w = step_rk4(w, [&](const WaveFunction& z) { return nls_rhs(z, model); },
                     c.dt);
      else
        config_fail("integrator.scheme", "expected strang or rk4");
      s = step_rk4(s, [&](const FluidState& z) { return qhd_rhs(z, model); }, c.dt);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      failed = true;
      failure_time = t;
      failure_reason = e.what();
      break;
    }
    times.push_back(t);
    residuals.push_back(fluid_rel_l2_distance(madelung(w), s));
    wave_energy.push_back(hamiltonian_nls(w, model));
    fluid_energy.push_back(hamiltonian_cf(s, model));
  }

  {
    std::ofstream os(dir.path("monitors/madelung-residual.csv"));
    write_series_csv(os, times, {"madelung-residual"}, {residuals});
  }
  {
    std::ofstream os(dir.path("monitors/energy.csv"));
    write_series_csv(os, times, {"wave-energy", "fluid-energy"},
                     {wave_energy, fluid_energy});
  }
  save_complex_csv(dir.path("fields/psi-final.csv"), w.psi, "psi");
  save_vector_csv(dir.path("fields/mu-final.csv"), s.mu, "mu");
  save_scalar_csv(dir.path("fields/rho-final.csv"), s.rho, "rho");

  double final_residual = residuals.back();
  bool pass = !failed && final_residual <= kCompareTol * c.tolerance_scale;
  manifest["failed"] = failed;
  manifest["failure_reason"] = failure_reason;
  if (failed) manifest["failure_time"] = failure_time;
  manifest["final_residual"] = final_residual;
  manifest["residual_tolerance"] = kCompareTol;
  manifest["pass"] = pass;
  write_manifest(dir, manifest);

  if (failed)
    report << "FAILED at t=" << failure_time << ": " << failure_reason << "\n";
  else
    report << "final madelung residual " << final_residual << " tol " << kCompareTol
           << " " << (pass ? "PASS" : "FAIL") << "\n";
  write_report(dir, report.str());
  return {failed ? 3 : (pass ? 0 : 1), report.str()};
}

}  // namespace

RunOutcome run_experiment(const std::string& config_path,
                          const std::string& out_dir_override,
                          std::optional<std::uint64_t> seed_override,
                          std::optional<double> tolerance_scale_override) {
  std::ifstream is(config_path);
  if (!is) throw ConfigError("config error at <file>: cannot open " + config_path);
  json j;
  try {
    is >> j;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config error at <parse>: ") + e.what());
  }
  Config c = parse_config(j);
  if (seed_override) c.seed = *seed_override;
  if (tolerance_scale_override) c.tolerance_scale = *tolerance_scale_override;

  std::string out_dir = out_dir_override;
  if (out_dir.empty()) {
    out_dir = fs::path(config_path).stem().string() + "-out";
  }
  RunDir dir(out_dir);

  if (c.kind == "verify") return run_verify(c, dir);
  if (c.kind == "evolve-nls") return run_evolve_nls(c, dir);
  if (c.kind == "evolve-qhd") return run_evolve_qhd(c, dir);
  return run_compare(c, dir);
}

RunOutcome report_run(const std::string& run_dir, bool gnuplot) {
  fs::path root(run_dir);
  std::ifstream is(root / "manifest.json");
  if (!is) throw std::runtime_error("no manifest.json in " + run_dir);
  json manifest;
  try {
    is >> manifest;
  } catch (const json::exception& e) {
    throw std::runtime_error("corrupt manifest.json: " + std::string(e.what()));
  }

  std::ostringstream out;
  out << "run: " << manifest.value("kind", "?") << "  seed "
      << manifest.value("seed", 0ull) << "  version "
      << manifest.value("version", "?") << "\n";
  if (manifest.value("failed", false)) {
    out << "FAILED";
    if (manifest.contains("failure_time"))
      out << " at t=" << manifest["failure_time"].get<double>();
    out << ": " << manifest.value("failure_reason", "") << "\n";
  }
  if (manifest.contains("checks")) {
    out << "\n";
    for (const auto& r : manifest["checks"]) {
      CheckResult cr;
      cr.name = r.value("name", "?");
      cr.samples = r.value("samples", 0);
      cr.max_residual = r.value("max_residual", 0.0);
      cr.min_residual = r.value("min_residual", 0.0);
      cr.tolerance = r.value("tolerance", 0.0);
      cr.pass = r.value("pass", false);
      cr.detail = r.value("detail", "");
      out << format_check_line(cr) << "\n";
    }
  }
  if (manifest.contains("monitor_drifts")) {
    out << "\nmonitor drifts:\n";
    for (auto it = manifest["monitor_drifts"].begin();
         it != manifest["monitor_drifts"].end(); ++it) {
      char buf[128];
      std::snprintf(buf, sizeof buf, "  %-24s %.3e\n", it.key().c_str(),
                    it.value().get<double>());
      out << buf;
    }
  }
  if (manifest.contains("final_residual")) {
    out << "\nfinal madelung residual " << manifest["final_residual"].get<double>()
        << "  tol " << manifest.value("residual_tolerance", 0.0) << "\n";
  }
  out << "\noverall: " << (manifest.value("pass", false) ? "PASS" : "FAIL") << "\n";

  // parse all monitor files before emitting anything, so a corrupt run
  // directory produces an error and no partial output
  std::vector<std::pair<fs::path, SeriesTable>> tables;
  fs::path monitors = root / "monitors";
  if (fs::exists(monitors)) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(monitors))
      if (e.path().extension() == ".csv") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
      std::ifstream ms(f);
      tables.emplace_back(f, read_series_csv(ms));
    }
  }
  if (gnuplot) {
    for (const auto& [f, t] : tables) {
      fs::path dat = f;
      dat.replace_extension(".dat");
      std::ofstream os(dat);
      os << "# time";
      for (const auto& n : t.names) os << ' ' << n;
      os << "\n";
      char buf[64];
      for (std::size_t i = 0; i < t.times.size(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", t.times[i]);
        os << buf;
        for (const auto& s : t.series) {
          std::snprintf(buf, sizeof buf, " %.17g", s[i]);
          os << buf;
        }
        os << "\n";
      }
      out << "wrote " << dat.string() << "\n";
    }
  }

  return {manifest.value("pass", false) ? 0 : 1, out.str()};
}

}  // namespace madlab
