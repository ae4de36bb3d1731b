#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "madlab/brackets.hpp"
#include "madlab/hamiltonians.hpp"

using namespace madlab;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// psi = (1 + 0.3 cos x) exp(i 0.2 sin x); the frozen energy constants below
// were computed for this state with 40-digit quadrature
WaveFunction oracle_wave(const GridSpec& g) {
  ComplexField f(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    double x = g.coord(0, i);
    f.v[i] = std::polar(1.0 + 0.3 * std::cos(x), 0.2 * std::sin(x));
  }
  return WaveFunction(std::move(f));
}

}  // namespace

TEST_SUITE("hamiltonians") {

TEST_CASE("builtin model table") {
  auto lin = model_by_name("linear");
  auto cub = model_by_name("cubic");
  auto gp = model_by_name("gp");
  CHECK(lin.f(2.0) == 0.0);
  CHECK(cub.f(2.0) == doctest::Approx(2.0));
  CHECK(gp.f(2.0) == doctest::Approx(1.0));
  CHECK(lin.U(2.0) == 0.0);
  CHECK(cub.U(2.0) == doctest::Approx(2.0));   // r^2/2
  CHECK(gp.U(2.0) == doctest::Approx(0.0));    // r^2/2 - r
  CHECK(gp.U(0.0) == 0.0);
  CHECK_THROWS_AS(model_by_name("quartic"), std::invalid_argument);
  CHECK(builtin_model_names().size() == 3);
}

TEST_CASE("wave energies match high-precision quadrature") {
  GridSpec g(64, kTwoPi);
  auto w = oracle_wave(g);
  CHECK(hamiltonian_nls(w, linear_model()) ==
        doctest::Approx(0.20844467256568278).epsilon(1e-12));
  CHECK(hamiltonian_nls(w, cubic_defocusing_model()) ==
        doctest::Approx(4.2078099303099992).epsilon(1e-12));
  CHECK(hamiltonian_nls(w, gross_pitaevskii_model()) ==
        doctest::Approx(-2.3581187156926687).epsilon(1e-12));
}

TEST_CASE("constant wave energy reduces to the potential term") {
  GridSpec g(32, kTwoPi);
  WaveFunction w(ComplexField(g, Complex(1.0, 0.0)));
  // U(1) = -1/2 for the Gross-Pitaevskii potential, integrated over 2 pi
  CHECK(hamiltonian_nls(w, gross_pitaevskii_model()) ==
        doctest::Approx(-std::numbers::pi).epsilon(1e-14));
  CHECK(hamiltonian_nls(w, linear_model()) == doctest::Approx(0.0));
}

TEST_CASE("quantum pressure of exp(cos x)") {
  GridSpec g(64, kTwoPi);
  ScalarField rho(g);
  for (std::size_t i = 0; i < g.size(); ++i) rho.v[i] = std::exp(std::cos(g.coord(0, i)));
  auto p = quantum_pressure(rho);
  // lap sqrt(rho) / (2 sqrt(rho)) = sin^2 x / 8 - cos x / 4 for this density
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    double x = g.coord(0, i);
    double want = std::sin(x) * std::sin(x) / 8.0 - std::cos(x) / 4.0;
    worst = std::max(worst, std::abs(p.v[i] - want));
  }
  CHECK(worst < 1e-12);
  CHECK(p.v[0] == doctest::Approx(-0.25).epsilon(1e-13));
}

TEST_CASE("quantum pressure guards against near-vacuum densities") {
  GridSpec g(32, kTwoPi);
  ScalarField rho(g, 1.0);
  rho.v[5] = 1e-9;
  CHECK_THROWS_AS(quantum_pressure(rho), std::domain_error);
}

TEST_CASE("fluid energy matches high-precision quadrature") {
  GridSpec g(64, kTwoPi);
  VectorField mu(g);
  ScalarField rho(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    double x = g.coord(0, i);
    mu.at(0, i) = 0.2 * std::sin(x);
    rho.v[i] = 1.0 + 0.4 * std::cos(x);
  }
  FluidState s(mu, rho);
  CHECK(hamiltonian_cf(s, gross_pitaevskii_model()) ==
        doctest::Approx(-2.7591275282869540).epsilon(1e-12));
}

TEST_CASE("uniform rest state is stationary for every model") {
  GridSpec g(32, kTwoPi);
  FluidState s(VectorField(g), ScalarField(g, 1.3));
  for (const auto& name : builtin_model_names()) {
    auto rhs = qhd_rhs(s, model_by_name(name));
    CHECK(sup_norm(rhs.mu) < 1e-13);
    CHECK(sup_norm(rhs.rho) < 1e-13);
  }
}

TEST_CASE("momentum form agrees with the velocity form through the product rule") {
  GridSpec g(128, kTwoPi);
  ScalarField rho(g), vpot(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    double x = g.coord(0, i);
    rho.v[i] = 1.0 + 0.3 * std::cos(x);
    vpot.v[i] = 0.2 * std::sin(x) + 0.1 * std::cos(2 * x);
  }
  VectorField v = from_components(vpot);
  FluidState s(rho * v, rho);
  auto m = gross_pitaevskii_model();
  auto rhs = qhd_rhs(s, m);
  auto [vdot, rhodot] = qhd_velocity_rhs(v, rho, m);
  // d/dt (rho v) = rho_t v + rho v_t
  VectorField mudot_want = rhodot * v + rho * vdot;
  CHECK(sup_norm(rhs.rho - rhodot) < 1e-11);
  CHECK(sup_norm(rhs.mu - mudot_want) < 1e-10);
}

TEST_CASE("energy gradients agree with finite differences") {
  GridSpec g(64, kTwoPi);
  auto w = oracle_wave(g);
  auto m = gross_pitaevskii_model();
  auto analytic = nls_energy_gradient(w, m);
  auto fd = fd_gradient_psi([&](const WaveFunction& q) { return hamiltonian_nls(q, m); }, w);
  CHECK(sup_norm(analytic - fd) < 1e-6);

  VectorField mu(g);
  ScalarField rho(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    double x = g.coord(0, i);
    mu.at(0, i) = 0.15 * std::sin(x);
    rho.v[i] = 1.0 + 0.25 * std::cos(x);
  }
  FluidState s(mu, rho);
  auto [dmu, drho] = fd_gradient_fluid(
      [&](const FluidState& q) { return hamiltonian_cf(q, m); }, s);
  CHECK(sup_norm(hamiltonian_cf_d_mu(s) - dmu) < 1e-6);
  CHECK(sup_norm(hamiltonian_cf_d_rho(s, m) - drho) < 1e-6);
}

TEST_CASE("wave and fluid energies coincide through the density-phase variables") {
  GridSpec g(64, kTwoPi);
  auto w = oracle_wave(g);
  FluidState s(momentum_density(w), density(w));
  for (const auto& name : builtin_model_names()) {
    auto m = model_by_name(name);
    double hn = hamiltonian_nls(w, m);
    double hf = hamiltonian_cf(s, m);
    CHECK(std::abs(hn - hf) < 1e-12 * std::max(1.0, std::abs(hn)));
  }
}

}  // TEST_SUITE
