#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "madlab/random_fields.hpp"
#include "madlab/states.hpp"

using namespace madlab;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// psi = (1 + 0.2 cos x) exp(i 0.3 sin x), used as the analytic workhorse
WaveFunction analytic_wave(const GridSpec& g) {
  ComplexField f(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    double x = g.coord(0, i);
    f.v[i] = std::polar(1.0 + 0.2 * std::cos(x), 0.3 * std::sin(x));
  }
  return WaveFunction(std::move(f));
}

}  // namespace

TEST_SUITE("states") {

TEST_CASE("density and momentum density of an analytic wave") {
  GridSpec g(64, kTwoPi);
  auto w = analytic_wave(g);
  auto rho = density(w);
  auto mu = momentum_density(w);
  for (std::size_t i = 0; i < g.size(); ++i) {
    double x = g.coord(0, i);
    double a = 1.0 + 0.2 * std::cos(x);
    CHECK(rho.v[i] == doctest::Approx(a * a).epsilon(1e-12));
    // mu = rho * tau' with tau = 0.3 sin x
    CHECK(mu.at(0, i) == doctest::Approx(a * a * 0.3 * std::cos(x)).epsilon(5e-12));
  }
  CHECK(min_density(w) == doctest::Approx(0.64).epsilon(1e-12));
}

TEST_CASE("polar roundtrip recovers amplitude and mean-zero phase") {
  GridSpec g(64, kTwoPi);
  ScalarField rho(g), tau(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    double x = g.coord(0, i);
    rho.v[i] = 1.0 + 0.3 * std::cos(x) + 0.1 * std::sin(2 * x);
    tau.v[i] = 0.4 * std::sin(x) - 0.15 * std::cos(3 * x);
  }
  // the constructor already normalizes tau to mean zero
  PolarDecomposition in(rho, tau);
  auto w = from_polar(in);
  auto back = to_polar(w);
  double drho = 0.0, dtau = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    drho = std::max(drho, std::abs(back.rho.v[i] - in.rho.v[i]));
    dtau = std::max(dtau, std::abs(back.tau.v[i] - in.tau.v[i]));
  }
  CHECK(drho < 1e-11);
  CHECK(dtau < 1e-11);
}

TEST_CASE("polar recovery drops a constant phase offset into the global phase") {
  GridSpec g(64, kTwoPi);
  ScalarField rho(g, 1.0), tau(g);
  for (std::size_t i = 0; i < g.size(); ++i) tau.v[i] = 0.4 * std::sin(g.coord(0, i)) + 0.7;
  auto w = from_polar(rho, tau);
  auto back = to_polar(w);
  // the representative is mean zero, so the 0.7 moves to a global phase
  CHECK(std::abs(mean(back.tau)) < 1e-12);
  auto w2 = from_polar(back);
  CHECK(global_phase_distance(w2, w) < 1e-12);
}

TEST_CASE("unit winding has no single-valued phase") {
  GridSpec g(64, kTwoPi);
  ComplexField f(g);
  for (std::size_t i = 0; i < g.size(); ++i) f.v[i] = std::polar(1.0, g.coord(0, i));
  WaveFunction w(std::move(f));
  CHECK_THROWS_AS(to_polar(w), std::domain_error);
}

TEST_CASE("near-vacuum states are rejected by polar recovery") {
  GridSpec g(64, kTwoPi);
  ComplexField f(g, Complex(1.0, 0.0));
  f.v[10] = Complex(1e-9, 0.0);  // |psi|^2 = 1e-18 < kRhoMin
  WaveFunction w(std::move(f));
  CHECK_THROWS_AS(to_polar(w), std::domain_error);
}

TEST_CASE("fluid state requires strictly positive density") {
  GridSpec g(16, kTwoPi);
  VectorField mu(g);
  ScalarField rho(g, 1.0);
  CHECK_NOTHROW(FluidState(mu, rho));
  rho.v[3] = 0.0;
  CHECK_THROWS_AS(FluidState(mu, rho), std::domain_error);
  rho.v[3] = -0.5;
  CHECK_THROWS_AS(FluidState(mu, rho), std::domain_error);
  // tangents carry unconstrained data
  rho.v[3] = -0.5;
  CHECK_NOTHROW(FluidTangent(mu, rho));
}

TEST_CASE("global phase distance is invariant under a constant rotation") {
  GridSpec g(64, kTwoPi);
  FieldSampler rng(17);
  auto w = rng.wave_function(g, 0.3);
  ComplexField rotated = std::polar(1.0, 1.234) * w.psi;
  CHECK(global_phase_distance(WaveFunction(rotated), w) < 1e-13);
  // a genuine perturbation registers
  ComplexField bumped = w.psi;
  bumped.v[5] += Complex(0.05, 0.0);
  CHECK(global_phase_distance(WaveFunction(bumped), w) > 1e-4);
}

TEST_CASE("relative fluid distance") {
  GridSpec g(32, kTwoPi);
  VectorField mu(g, 0.2);
  ScalarField rho(g, 1.0);
  FluidState a(mu, rho), b(mu, rho);
  CHECK(fluid_rel_l2_distance(a, b) == 0.0);
  ScalarField rho2 = rho + 0.01;
  FluidState c(mu, rho2);
  double d = fluid_rel_l2_distance(c, b);
  // ||drho|| / sqrt(||mu||^2 + ||rho||^2) = 0.01 / sqrt(0.04 + 1)
  CHECK(d == doctest::Approx(0.01 / std::sqrt(1.04)).epsilon(1e-12));
}

TEST_CASE("tangent arithmetic") {
  GridSpec g(16, kTwoPi);
  FluidTangent a(VectorField(g, 1.0), ScalarField(g, 2.0));
  FluidTangent b(VectorField(g, 0.5), ScalarField(g, -1.0));
  auto c = a + 2.0 * b;
  CHECK(c.mu.at(0, 4) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(c.rho.v[4] == doctest::Approx(0.0).epsilon(1e-15));
  auto d = a - b;
  CHECK(d.rho.v[0] == doctest::Approx(3.0).epsilon(1e-15));
}

}  // TEST_SUITE
