#include "madlab/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "madlab/brackets.hpp"
#include "madlab/dynamics.hpp"
#include "madlab/hamiltonians.hpp"
#include "madlab/madelung.hpp"
#include "madlab/random_fields.hpp"
#include "madlab/symmetry.hpp"

namespace madlab {

namespace {

// suite grids; 2D stays small because the identities are grid-size agnostic
GridSpec line_grid() { return GridSpec(64, 2.0 * M_PI); }
GridSpec plane_grid() { return GridSpec(32, 32, 2.0 * M_PI, 2.0 * M_PI); }

// per-suite seed offsets keep suites independent of execution order
constexpr std::uint64_t kSeedStride = 0x9e3779b97f4a7c15ull;

CheckResult make_result(std::string name, int samples, double max_res, double min_res,
                        double tol, double scale, bool lower_bound = false) {
  CheckResult r;
  r.name = std::move(name);
  r.samples = samples;
  r.max_residual = max_res;
  r.min_residual = min_res;
  r.tolerance = tol;
  // lower-bound checks (test-power checks) are not loosened by the debug scale
  r.pass = lower_bound ? (min_res >= tol) : (max_res <= tol * scale);
  return r;
}

struct Extremes {
  double max = 0.0;
  double min = std::numeric_limits<double>::infinity();
  int n = 0;
  void add(double r) {
    max = std::max(max, r);
    min = std::min(min, r);
    ++n;
  }
};

std::vector<NonlinearityModel> all_models() {
  std::vector<NonlinearityModel> out;
  for (const auto& name : builtin_model_names()) out.push_back(model_by_name(name));
  return out;
}

double drift(const std::vector<double>& series) {
  double d = 0.0;
  for (double x : series) d = std::max(d, std::abs(x - series.front()));
  return d / std::max(1.0, std::abs(series.front()));
}

}  // namespace

WaveFunction reference_wave(int n) {
  GridSpec g(n, 2.0 * M_PI);
  ScalarField rho(g), tau(g);
  for (std::size_t i = 0; i < rho.v.size(); ++i) {
    double x = g.coord(0, i);
    rho.v[i] = 1.0 + 0.2 * std::cos(x);
    tau.v[i] = 0.1 * std::sin(x);
  }
  return from_polar(rho, tau);
}

CheckResult momentum_map_suite(std::uint64_t seed, double tolerance_scale) {
  constexpr double kTol = 1e-10;
  constexpr int kSamples = 50;  // per grid
  FieldSampler sampler(seed);

  Extremes ex;
  for (const GridSpec& g : {line_grid(), plane_grid()}) {
    for (int s = 0; s < kSamples; ++s) {
      WaveFunction w = sampler.wave_function(g, 0.3);
      AlgebraElement xi = sampler.algebra_element(g, 0.3);
      ComplexField lhs = hamiltonian_vector_field_psi(moment_functional(xi), w);
      ComplexField rhs = algebra_act(xi, w);
      ex.add(sup_norm(lhs - rhs) / sup_norm(rhs));
    }
  }
  return make_result("momentum-map-identity", ex.n, ex.max, ex.min, kTol,
                     tolerance_scale);
}

std::vector<CheckResult> equivariance_suite(std::uint64_t seed,
                                            double tolerance_scale) {
  constexpr double kTol = 1e-9;
  constexpr double kFlippedFloor = 1e-2;
  constexpr int kSamples = 50;
  FieldSampler sampler(seed + kSeedStride);
  GridSpec g = line_grid();

  Extremes ok, flipped;
  for (int s = 0; s < kSamples; ++s) {
    WaveFunction w = sampler.wave_function(g, 0.3);
    AlgebraElement xi = sampler.algebra_element(g, 0.3);
    AlgebraElement eta = sampler.algebra_element(g, 0.3);
    ok.add(equivariance_residual(xi, eta, w));
    flipped.add(equivariance_residual_flipped(xi, eta, w));
  }

  // power check: with the orientation of the vector-field bracket reversed,
  // the worst sample must blow past 1e-2 and every sample must sit above the
  // passing tolerance, so the wrong convention cannot sneak through
  CheckResult power = make_result("equivariance-flipped-bracket", flipped.n,
                                  flipped.max, flipped.min, kFlippedFloor,
                                  tolerance_scale, true);
  power.pass = flipped.max >= kFlippedFloor && flipped.min > kTol;
  char buf[96];
  std::snprintf(buf, sizeof buf, "min %.3e > %.0e", flipped.min, kTol);
  power.detail = buf;

  return {make_result("equivariance", ok.n, ok.max, ok.min, kTol, tolerance_scale),
          std::move(power)};
}

CheckResult poisson_map_suite(std::uint64_t seed, double tolerance_scale) {
  constexpr double kTol = 1e-8;
  constexpr int kPairs = 20;
  FieldSampler sampler(seed + 2 * kSeedStride);
  GridSpec g = line_grid();

  // pool entries pair a fluid functional with its wave-side counterpart;
  // moments get their closed-form gradient, the rest go through the pullback
  auto draw = [&]() -> std::pair<PsiFunctional, FluidFunctional> {
    double u = 0.5 * (sampler.symmetric_uniform() + 1.0);
    int kind = std::min(4, (int)(u * 5.0));
    switch (kind) {
      case 0: {
        AlgebraElement xi = sampler.algebra_element(g, 0.3);
        return {moment_functional(xi), linear_pairing_functional(xi)};
      }
      case 1: {
        FluidFunctional F = density_power_functional(2);
        return {pullback_functional(F), F};
      }
      case 2: {
        FluidFunctional F = momentum_square_functional();
        return {pullback_functional(F), F};
      }
      case 3: {
        FluidFunctional F = weighted_density_functional(sampler.scalar(g, 0.5), 1);
        return {pullback_functional(F), F};
      }
      default: {
        FluidFunctional F = weighted_momentum_functional(sampler.vector(g, 0.5));
        return {pullback_functional(F), F};
      }
    }
  };

  Extremes ex;
  for (int s = 0; s < kPairs; ++s) {
    auto [Fp, Ff] = draw();
    auto [Gp, Gf] = draw();
    WaveFunction w = sampler.wave_function(g, 0.3);
    double lhs = pb_psi(Fp, Gp, w);
    double rhs = pb_fluid(Ff, Gf, madelung(w));
    double scale = std::max(std::abs(lhs), std::abs(rhs));
    ex.add(std::abs(lhs - rhs) / std::max(1.0, scale));
  }
  return make_result("poisson-map", ex.n, ex.max, ex.min, kTol, tolerance_scale);
}

std::vector<CheckResult> intertwining_suite(std::uint64_t seed,
                                            double tolerance_scale) {
  constexpr double kTol = 1e-8;
  constexpr int kSamples = 20;
  // gentler draws than the other suites: the right-hand sides divide by rho
  // and differentiate sqrt(rho), so the analytic tail of the perturbation
  // must die out well inside the resolved band
  constexpr double kAmplitude = 0.10;
  constexpr int kMaxMode = 6;
  GridSpec g = line_grid();

  std::vector<CheckResult> out;
  std::uint64_t offset = 3;
  for (const auto& model : all_models()) {
    FieldSampler sampler(seed + offset++ * kSeedStride);
    Extremes ex;
    for (int s = 0; s < kSamples; ++s) {
      WaveFunction w = sampler.wave_function(g, kAmplitude, kMaxMode);
      ex.add(intertwine_check(w, model).rel_sup);
    }
    out.push_back(make_result("intertwine-" + model.name, ex.n, ex.max, ex.min, kTol,
                              tolerance_scale));
  }
  return out;
}

CheckResult hamiltonian_correspondence_suite(std::uint64_t seed,
                                             double tolerance_scale) {
  constexpr double kTol = 1e-10;
  constexpr int kSamples = 20;
  FieldSampler sampler(seed + 6 * kSeedStride);
  GridSpec g = line_grid();

  Extremes ex;
  for (const auto& model : all_models()) {
    for (int s = 0; s < kSamples; ++s) {
      WaveFunction w = sampler.wave_function(g, 0.3);
      double hn = hamiltonian_nls(w, model);
      double hc = hamiltonian_cf(madelung(w), model);
      ex.add(std::abs(hn - hc) / std::abs(hn));
    }
  }
  return make_result("hamiltonian-correspondence", ex.n, ex.max, ex.min, kTol,
                     tolerance_scale);
}

std::vector<CheckResult> bracket_algebra_suite(std::uint64_t seed,
                                               double tolerance_scale) {
  constexpr double kAntisymTol = 1e-13;
  constexpr double kJacobiTol = 1e-8;
  constexpr double kLiePoissonTol = 1e-10;
  constexpr int kSamples = 20;
  FieldSampler sampler(seed + 7 * kSeedStride);
  GridSpec g = line_grid();

  Extremes antisym, jacobi, lp;
  for (int s = 0; s < kSamples; ++s) {
    WaveFunction w = sampler.wave_function(g, 0.3);
    AlgebraElement xi = sampler.algebra_element(g, 0.3);
    AlgebraElement eta = sampler.algebra_element(g, 0.3);
    AlgebraElement zeta = sampler.algebra_element(g, 0.3);

    PsiFunctional F = moment_functional(xi);
    PsiFunctional G = pullback_functional(density_power_functional(2));
    double fg = pb_psi(F, G, w);
    double gf = pb_psi(G, F, w);
    antisym.add(std::abs(fg + gf) / std::max(1.0, std::abs(fg)));

    // cyclic Jacobi sum with inner brackets rewritten through equivariance,
    // which the equivariance suite certifies independently
    double cyc =
        pb_psi(moment_functional(xi), moment_functional(lie_bracket(eta, zeta)), w) +
        pb_psi(moment_functional(eta), moment_functional(lie_bracket(zeta, xi)), w) +
        pb_psi(moment_functional(zeta), moment_functional(lie_bracket(xi, eta)), w);
    double jscale = std::max(1.0, std::abs(pb_psi(moment_functional(xi),
                                                  moment_functional(eta), w)));
    jacobi.add(std::abs(cyc) / jscale);

    // {F_xi, F_eta} = F_[xi,eta] on a fluid state drawn away from the image
    // of the wave side
    ScalarField rho = sampler.scalar(g, 0.3) + 1.0;
    VectorField mu = sampler.vector(g, 0.3);
    FluidState fs(std::move(mu), std::move(rho));
    double lhs = pb_fluid(linear_pairing_functional(xi), linear_pairing_functional(eta),
                          fs);
    double rhs = pairing(fs, lie_bracket(xi, eta));
    lp.add(std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
  }
  return {make_result("bracket-antisymmetry", antisym.n, antisym.max, antisym.min,
                      kAntisymTol, tolerance_scale),
          make_result("bracket-jacobi", jacobi.n, jacobi.max, jacobi.min, kJacobiTol,
                      tolerance_scale),
          make_result("lie-poisson-reproduction", lp.n, lp.max, lp.min,
                      kLiePoissonTol, tolerance_scale)};
}

std::vector<CheckResult> numerics_suite(double tolerance_scale) {
  std::vector<CheckResult> out;

  // spectral derivatives reproduce hand-differentiated trigonometric data
  {
    constexpr double kTol = 1e-11;
    Extremes ex;
    {
      GridSpec g = line_grid();
      ScalarField f(g), df(g), lf(g);
      for (std::size_t i = 0; i < f.v.size(); ++i) {
        double x = g.coord(0, i);
        f.v[i] = std::sin(3 * x) + 0.5 * std::cos(7 * x);
        df.v[i] = 3 * std::cos(3 * x) - 3.5 * std::sin(7 * x);
        lf.v[i] = -9 * std::sin(3 * x) - 24.5 * std::cos(7 * x);
      }
      ex.add(sup_norm(derivative(f, 0) - df));
      ex.add(sup_norm(laplacian(f) - lf));
    }
    {
      GridSpec g = plane_grid();
      ScalarField f(g), d0(g), d1(g);
      for (std::size_t i = 0; i < f.v.size(); ++i) {
        double x = g.coord(0, i);
        double y = g.coord(1, i);
        f.v[i] = std::sin(2 * x + 5 * y);
        d0.v[i] = 2 * std::cos(2 * x + 5 * y);
        d1.v[i] = 5 * std::cos(2 * x + 5 * y);
      }
      ex.add(sup_norm(derivative(f, 0) - d0));
      ex.add(sup_norm(derivative(f, 1) - d1));
    }
    out.push_back(make_result("spectral-derivative-exactness", ex.n, ex.max, ex.min,
                              kTol, tolerance_scale));
  }

  // wave data shared by the convergence studies
  GridSpec g(32, 2.0 * M_PI);
  ComplexField psi0(g);
  for (std::size_t i = 0; i < psi0.v.size(); ++i) {
    double x = g.coord(0, i);
    psi0.v[i] = Complex(1.0 + 0.3 * std::cos(x) + 0.1 * std::sin(2 * x),
                        0.2 * std::sin(x) + 0.1 * std::cos(3 * x));
  }
  WaveFunction w0{psi0};

  // RK4 order against the exact linear-flow solution
  {
    constexpr double kOrderTol = 0.2;
    const double horizon = 1.0;
    NonlinearityModel lin = linear_model();

    std::vector<Complex> coeffs = fourier_coefficients(psi0);
    for (int i = 0; i < g.n[0]; ++i) {
      double k = wavenumber(g, 0, i);
      coeffs[i] *= std::polar(1.0, -0.5 * horizon * k * k);
    }
    ComplexField exact = field_from_coefficients(g, coeffs);

    // largest dt keeps |k|^2 dt / 2 inside the RK4 stability interval at the
    // Nyquist mode, so roundoff seeded there cannot grow
    auto rhs = [&](const WaveFunction& y) { return nls_rhs(y, lin); };
    std::vector<double> errs;
    for (double dt : {0.02, 0.01, 0.005}) {
      WaveFunction y = w0;
      long long n = std::llround(horizon / dt);
      for (long long k = 0; k < n; ++k) y = step_rk4(y, rhs, dt);
      errs.push_back(l2_norm(y.psi - exact) / l2_norm(exact));
    }
    double p1 = std::log2(errs[0] / errs[1]);
    double p2 = std::log2(errs[1] / errs[2]);
    double residual = std::max(std::abs(p1 - 4.0), std::abs(p2 - 4.0));
    CheckResult r = make_result("rk4-order", 3, residual, residual, kOrderTol,
                                tolerance_scale);
    char buf[128];
    std::snprintf(buf, sizeof buf, "orders %.3f %.3f", p1, p2);
    r.detail = buf;
    out.push_back(std::move(r));
  }

  // Strang order against a fine RK4 reference on the full nonlinear flow
  {
    constexpr double kOrderTol = 0.1;
    const double horizon = 0.5;
    NonlinearityModel gp = gross_pitaevskii_model();

    auto rhs = [&](const WaveFunction& y) { return nls_rhs(y, gp); };
    WaveFunction ref = w0;
    {
      const double dt = 2e-4;
      long long n = std::llround(horizon / dt);
      for (long long k = 0; k < n; ++k) ref = step_rk4(ref, rhs, dt);
    }
    std::vector<double> errs;
    for (double dt : {0.02, 0.01, 0.005}) {
      WaveFunction y = w0;
      long long n = std::llround(horizon / dt);
      for (long long k = 0; k < n; ++k) y = step_strang_nls(y, gp, dt);
      errs.push_back(l2_norm(y.psi - ref.psi) / l2_norm(ref.psi));
    }
    double p1 = std::log2(errs[0] / errs[1]);
    double p2 = std::log2(errs[1] / errs[2]);
    double residual = std::max(std::abs(p1 - 2.0), std::abs(p2 - 2.0));
    CheckResult r = make_result("strang-order", 3, residual, residual, kOrderTol,
                                tolerance_scale);
    char buf[128];
    std::snprintf(buf, sizeof buf, "orders %.3f %.3f", p1, p2);
    r.detail = buf;
    out.push_back(std::move(r));
  }

  // analytic gradients against per-node central differences; the fluid side
  // divides by rho inside the quantum term, so it gets a finer grid and a
  // gentler state to keep the analytic tail below the FD truncation error
  {
    constexpr double kTol = 1e-6;
    constexpr double kEps = 1e-5;
    NonlinearityModel gp = gross_pitaevskii_model();

    PsiFunctional H = nls_hamiltonian_functional(gp);
    ComplexField fd = fd_gradient_psi(H.evaluate, w0, kEps);
    double res_psi = sup_norm(fd - nls_energy_gradient(w0, gp));
    Extremes ex1;
    ex1.add(res_psi);
    out.push_back(
        make_result("fd-gradient-wave", 1, ex1.max, ex1.min, kTol, tolerance_scale));

    GridSpec gf(64, 2.0 * M_PI);
    ScalarField rho(gf), tau(gf);
    for (std::size_t i = 0; i < rho.v.size(); ++i) {
      double x = gf.coord(0, i);
      rho.v[i] = 1.0 + 0.15 * std::cos(x) + 0.1 * std::sin(2 * x);
      tau.v[i] = 0.1 * std::sin(x) + 0.05 * std::cos(2 * x);
    }
    FluidState s = madelung(from_polar(rho, tau));
    FluidFunctional Hf = cf_hamiltonian_functional(gp);
    auto [fd_mu, fd_rho] = fd_gradient_fluid(Hf.evaluate, s, kEps);
    Extremes ex2;
    ex2.add(sup_norm(fd_mu - hamiltonian_cf_d_mu(s)));
    ex2.add(sup_norm(fd_rho - hamiltonian_cf_d_rho(s, gp)));
    out.push_back(
        make_result("fd-gradient-fluid", 2, ex2.max, ex2.min, kTol, tolerance_scale));
  }

  return out;
}

std::vector<CheckResult> group_action_suite(std::uint64_t seed,
                                            double tolerance_scale) {
  constexpr double kUnitarityTol = 1e-8;
  constexpr double kCompositionTol = 1e-7;
  constexpr double kRatioTol = 0.5;  // ratio within [3.5, 4.5]
  FieldSampler sampler(seed + 8 * kSeedStride);
  GridSpec g = line_grid();

  Extremes unit;
  for (int s = 0; s < 20; ++s) {
    WaveFunction w = sampler.wave_function(g, 0.3);
    GroupElement e = sampler.group_element(g);
    double n0 = l2_norm(w.psi);
    unit.add(std::abs(l2_norm(group_act(e, w).psi) - n0) / n0);
  }

  Extremes comp;
  for (int s = 0; s < 10; ++s) {
    WaveFunction w = sampler.wave_function(g, 0.3);
    GroupElement e1 = sampler.group_element(g);
    GroupElement e2 = sampler.group_element(g);
    WaveFunction two = group_act(e1, group_act(e2, w));
    WaveFunction one = group_act(group_compose(e1, e2), w);
    comp.add(sup_norm(two.psi - one.psi) / sup_norm(two.psi));
  }

  // halving epsilon must cut the central-difference defect by 4
  Extremes ratio;
  for (int s = 0; s < 5; ++s) {
    WaveFunction w = sampler.wave_function(g, 0.3);
    AlgebraElement xi = sampler.algebra_element(g, 0.3);
    double coarse = flow_derivative_residual(xi, w, 2e-3);
    double fine = flow_derivative_residual(xi, w, 1e-3);
    ratio.add(std::abs(coarse / fine - 4.0));
  }

  return {make_result("group-unitarity", unit.n, unit.max, unit.min, kUnitarityTol,
                      tolerance_scale),
          make_result("group-composition", comp.n, comp.max, comp.min,
                      kCompositionTol, tolerance_scale),
          make_result("group-flow-derivative", ratio.n, ratio.max, ratio.min,
                      kRatioTol, tolerance_scale)};
}

std::vector<CheckResult> conservation_suite(double tolerance_scale) {
  constexpr double kEnergyTol = 1e-8;
  constexpr double kMassTolRk4 = 1e-10;
  constexpr double kMassTolStrang = 1e-12;
  constexpr double kMomentTol = 1e-8;
  const double dt = 1e-3;
  const double horizon = 1.0;
  NonlinearityModel gp = gross_pitaevskii_model();

  WaveFunction w0 = reference_wave(128);
  const GridSpec& g = w0.grid();

  // conserved moments: unit translation and constant phase shift
  AlgebraElement translation(VectorField(g, 1.0), ScalarField(g, 0.0));
  AlgebraElement phase_shift(VectorField(g, 0.0), ScalarField(g, 1.0));

  std::vector<Monitor<WaveFunction>> wave_monitors = {
      {"energy", [&](const WaveFunction& y) { return hamiltonian_nls(y, gp); }},
      {"mass", [](const WaveFunction& y) { return integrate(density(y)); }},
      {"momentum", [&](const WaveFunction& y) { return moment(translation, y); }},
      {"phase-moment", [&](const WaveFunction& y) { return moment(phase_shift, y); }},
  };

  auto strang = [&](const WaveFunction& y, double h) {
    return step_strang_nls(y, gp, h);
  };
  auto rk4_wave = [&](const WaveFunction& y, double h) {
    return step_rk4(y, [&](const WaveFunction& z) { return nls_rhs(z, gp); }, h);
  };
  TrajectoryRecord<WaveFunction> strang_run =
      evolve(w0, strang, dt, horizon, wave_monitors);
  TrajectoryRecord<WaveFunction> rk4_run =
      evolve(w0, rk4_wave, dt, horizon, wave_monitors);

  std::vector<Monitor<FluidState>> fluid_monitors = {
      {"energy", [&](const FluidState& y) { return hamiltonian_cf(y, gp); }},
      {"mass", [](const FluidState& y) { return integrate(y.rho); }},
      {"momentum", [&](const FluidState& y) { return pairing(y, translation); }},
  };
  auto rk4_fluid = [&](const FluidState& y, double h) {
    return step_rk4(y, [&](const FluidState& z) { return qhd_rhs(z, gp); }, h);
  };
  TrajectoryRecord<FluidState> qhd_run =
      evolve(madelung(w0), rk4_fluid, dt, horizon, fluid_monitors);

  auto series = [](const auto& rec, int idx) -> const std::vector<double>& {
    return rec.monitor_series[idx];
  };

  std::vector<CheckResult> out;
  auto push = [&](std::string name, double d, double tol) {
    out.push_back(make_result(std::move(name), 1, d, d, tol, tolerance_scale));
  };
  if (strang_run.failed || rk4_run.failed || qhd_run.failed) {
    CheckResult r;
    r.name = "conservation-runs";
    r.tolerance = 0.0;
    r.max_residual = std::numeric_limits<double>::infinity();
    r.pass = false;
    r.detail = strang_run.failed ? strang_run.failure_reason
               : rk4_run.failed ? rk4_run.failure_reason
                                : qhd_run.failure_reason;
    return {r};
  }

  push("energy-drift-wave-rk4", drift(series(rk4_run, 0)), kEnergyTol);
  push("mass-drift-wave-rk4", drift(series(rk4_run, 1)), kMassTolRk4);
  push("momentum-drift-wave-rk4", drift(series(rk4_run, 2)), kMomentTol);
  push("phase-moment-drift-wave-rk4", drift(series(rk4_run, 3)), kMomentTol);
  push("mass-drift-wave-strang", drift(series(strang_run, 1)), kMassTolStrang);
  push("momentum-drift-wave-strang", drift(series(strang_run, 2)), kMomentTol);
  push("phase-moment-drift-wave-strang", drift(series(strang_run, 3)), kMomentTol);
  push("energy-drift-fluid-rk4", drift(series(qhd_run, 0)), kEnergyTol);
  push("mass-drift-fluid-rk4", drift(series(qhd_run, 1)), kMassTolRk4);
  push("momentum-drift-fluid-rk4", drift(series(qhd_run, 2)), kMomentTol);
  return out;
}

CheckResult flow_equivalence_suite(double tolerance_scale) {
  constexpr double kTol = 1e-4;
  const double dt = 1e-3;
  const double horizon = 0.5;
  NonlinearityModel gp = gross_pitaevskii_model();

  WaveFunction w0 = reference_wave(128);
  auto strang = [&](const WaveFunction& y, double h) {
    return step_strang_nls(y, gp, h);
  };
  auto rk4_fluid = [&](const FluidState& y, double h) {
    return step_rk4(y, [&](const FluidState& z) { return qhd_rhs(z, gp); }, h);
  };

  TrajectoryRecord<WaveFunction> nls =
      evolve(w0, strang, dt, horizon, {});
  TrajectoryRecord<FluidState> qhd =
      evolve(madelung(w0), rk4_fluid, dt, horizon, {});

  CheckResult r;
  r.name = "flow-equivalence";
  r.samples = 1;
  r.tolerance = kTol;
  if (nls.failed || qhd.failed) {
    r.max_residual = std::numeric_limits<double>::infinity();
    r.pass = false;
    r.detail = nls.failed ? nls.failure_reason : qhd.failure_reason;
    return r;
  }
  double d = fluid_rel_l2_distance(madelung(nls.final_state()), qhd.final_state());
  r.max_residual = r.min_residual = d;
  r.pass = d <= kTol * tolerance_scale;
  return r;
}

std::vector<CheckResult> verify_suites(std::uint64_t seed, double tolerance_scale) {
  std::vector<CheckResult> out;
  out.push_back(momentum_map_suite(seed, tolerance_scale));
  for (auto& r : equivariance_suite(seed, tolerance_scale)) out.push_back(std::move(r));
  out.push_back(poisson_map_suite(seed, tolerance_scale));
  for (auto& r : intertwining_suite(seed, tolerance_scale)) out.push_back(std::move(r));
  out.push_back(hamiltonian_correspondence_suite(seed, tolerance_scale));
  return out;
}

std::vector<CheckResult> all_suites(std::uint64_t seed, double tolerance_scale) {
  std::vector<CheckResult> out = verify_suites(seed, tolerance_scale);
  out.push_back(flow_equivalence_suite(tolerance_scale));
  for (auto& r : conservation_suite(tolerance_scale)) out.push_back(std::move(r));
  for (auto& r : bracket_algebra_suite(seed, tolerance_scale))
    out.push_back(std::move(r));
  for (auto& r : numerics_suite(tolerance_scale)) out.push_back(std::move(r));
  for (auto& r : group_action_suite(seed, tolerance_scale))
    out.push_back(std::move(r));
  return out;
}

std::string format_check_line(const CheckResult& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-34s %4d samples  max %.3e  tol %.1e  %s%s%s",
                r.name.c_str(), r.samples, r.max_residual, r.tolerance,
                r.pass ? "PASS" : "FAIL", r.detail.empty() ? "" : "  ",
                r.detail.c_str());
  return buf;
}

}  // namespace madlab
