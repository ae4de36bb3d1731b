#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "madlab/madelung.hpp"
#include "madlab/random_fields.hpp"

using namespace madlab;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

WaveFunction analytic_wave(const GridSpec& g, double ra, double ta) {
  ComplexField f(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    double x = g.coord(0, i);
    f.v[i] = std::polar(1.0 + ra * std::cos(x), ta * std::sin(x));
  }
  return WaveFunction(std::move(f));
}

double tangent_sup(const FluidTangent& t) {
  return std::max(sup_norm(t.mu), sup_norm(t.rho));
}

}  // namespace

TEST_SUITE("madelung") {

TEST_CASE("wave-to-fluid map on an analytic state") {
  GridSpec g(64, kTwoPi);
  auto w = analytic_wave(g, 0.2, 0.3);
  auto s = madelung(w);
  for (std::size_t i = 0; i < g.size(); ++i) {
    double x = g.coord(0, i);
    double a = 1.0 + 0.2 * std::cos(x);
    CHECK(s.rho.v[i] == doctest::Approx(a * a).epsilon(1e-12));
    CHECK(s.mu.at(0, i) == doctest::Approx(a * a * 0.3 * std::cos(x)).epsilon(5e-12));
  }
}

TEST_CASE("vanishing amplitude is rejected") {
  GridSpec g(32, kTwoPi);
  ComplexField f(g, Complex(1.0, 0.0));
  f.v[7] = Complex(0.0, 0.0);
  CHECK_THROWS_AS(madelung(WaveFunction(std::move(f))), std::domain_error);
}

TEST_CASE("tangent map matches the difference quotient of the full map") {
  GridSpec g(64, kTwoPi);
  FieldSampler rng(31);
  auto w = rng.wave_function(g, 0.3);
  auto phi = rng.complex_field(g, 0.5);
  auto push = pushforward(w, phi);

  // the map is quadratic, so the central difference is exact up to roundoff
  const double eps = 1e-5;
  auto plus = madelung(WaveFunction(w.psi + eps * phi));
  auto minus = madelung(WaveFunction(w.psi + (-eps) * phi));
  FluidTangent diff(1.0 / (2 * eps) * (plus.mu - minus.mu),
                    1.0 / (2 * eps) * (plus.rho - minus.rho));
  CHECK(tangent_sup(FluidTangent(diff.mu - push.mu, diff.rho - push.rho)) < 1e-9);
}

TEST_CASE("pullback evaluates through the map and differentiates by the chain rule") {
  GridSpec g(64, kTwoPi);
  FieldSampler rng(37);
  auto w = rng.wave_function(g, 0.3);
  for (const FluidFunctional& F :
       {density_power_functional(2), momentum_square_functional(),
        density_momentum_square_functional()}) {
    auto P = pullback_functional(F);
    CHECK(P.evaluate(w) == doctest::Approx(F.evaluate(madelung(w))).epsilon(1e-13));
    auto fd = fd_gradient_psi(P.evaluate, w);
    CHECK(sup_norm(P.gradient(w) - fd) < 1e-6);
  }
}

TEST_CASE("wave flow pushes forward to the fluid flow") {
  GridSpec g(64, kTwoPi);
  auto w = analytic_wave(g, 0.1, 0.05);
  for (const auto& name : builtin_model_names()) {
    auto r = intertwine_check(w, model_by_name(name));
    CHECK(r.rel_sup < 1e-8);
    CHECK(r.rel_l2 < 1e-8);
    CHECK(r.scale > 0.0);
  }
}

TEST_CASE("winding numbers count phase circulation") {
  GridSpec g(64, kTwoPi);
  ComplexField f(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    double x = g.coord(0, i);
    f.v[i] = (1.0 + 0.2 * std::cos(x)) * std::polar(1.0, 2.0 * x);
  }
  auto wn = winding_numbers(WaveFunction(std::move(f)));
  REQUIRE(wn.size() == 1);
  CHECK(wn[0] == 2);

  // zero-winding state
  auto w0 = analytic_wave(g, 0.2, 0.4);
  CHECK(winding_numbers(w0)[0] == 0);

  GridSpec g2(32, 32, kTwoPi, kTwoPi);
  ComplexField f2(g2);
  for (std::size_t i = 0; i < g2.size(); ++i) {
    double x = g2.coord(0, i), y = g2.coord(1, i);
    f2.v[i] = std::polar(1.0, x + 3.0 * y);
  }
  auto wn2 = winding_numbers(WaveFunction(std::move(f2)));
  REQUIRE(wn2.size() == 2);
  CHECK(wn2[0] == 1);
  CHECK(wn2[1] == 3);
}

TEST_CASE("winding requires a density bounded away from zero") {
  GridSpec g(64, kTwoPi);
  ComplexField f(g, Complex(1.0, 0.0));
  f.v[3] = Complex(1e-9, 0.0);
  CHECK_THROWS_AS(winding_numbers(WaveFunction(std::move(f))), std::domain_error);
}

}  // TEST_SUITE
