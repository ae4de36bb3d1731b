#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "madlab/madelung.hpp"
#include "madlab/random_fields.hpp"
#include "madlab/symmetry.hpp"

using namespace madlab;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

WaveFunction oracle_wave(const GridSpec& g) {
  ComplexField f(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    double x = g.coord(0, i);
    f.v[i] = std::polar(1.0 + 0.3 * std::cos(x), 0.2 * std::sin(x));
  }
  return WaveFunction(std::move(f));
}

// the element the frozen action values were computed for:
// g = x + 0.1 sin x, phase 0.2 cos x
GroupElement oracle_element(const GridSpec& g) {
  ScalarField f(g), a(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    double x = g.coord(0, i);
    f.v[i] = 0.1 * std::sin(x);
    a.v[i] = 0.2 * std::cos(x);
  }
  return GroupElement(from_components(f), a);
}

AlgebraElement xi_element(const GridSpec& g) {
  ScalarField v(g), a(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    double x = g.coord(0, i);
    v.v[i] = 0.3 * std::sin(x);
    a.v[i] = 0.1 + 0.2 * std::cos(x);
  }
  return AlgebraElement(from_components(v), a);
}

AlgebraElement eta_element(const GridSpec& g) {
  ScalarField v(g), a(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    double x = g.coord(0, i);
    v.v[i] = 0.2 * std::cos(x);
    a.v[i] = 0.3 * std::sin(2 * x);
  }
  return AlgebraElement(from_components(v), a);
}

}  // namespace

TEST_SUITE("symmetry") {

TEST_CASE("identity element acts as the identity") {
  GridSpec g(64, kTwoPi);
  auto w = oracle_wave(g);
  auto out = group_act(group_identity(g), w);
  CHECK(sup_norm(out.psi - w.psi) < 1e-13);
  auto inv = invert_diffeomorphism(group_identity(g));
  for (std::size_t i = 0; i < g.size(); ++i)
    CHECK(inv[i][0] == doctest::Approx(g.coord(0, i)).epsilon(1e-14));
}

TEST_CASE("pure translation shifts the argument") {
  GridSpec g(64, kTwoPi);
  auto w = oracle_wave(g);
  const double c = 3.0 * g.spacing(0);  // exact multiple of the node spacing
  GroupElement e(VectorField(g, c), ScalarField(g));
  auto out = group_act(e, w);
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::size_t src = (i + g.size() - 3) % g.size();
    worst = std::max(worst, std::abs(out.psi.v[i] - w.psi.v[src]));
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("pure phase multiplies pointwise") {
  GridSpec g(64, kTwoPi);
  auto w = oracle_wave(g);
  ScalarField a(g);
  for (std::size_t i = 0; i < g.size(); ++i) a.v[i] = 0.4 * std::sin(2 * g.coord(0, i));
  GroupElement e(VectorField(g), a);
  auto out = group_act(e, w);
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    worst = std::max(worst,
                     std::abs(out.psi.v[i] - std::polar(1.0, -a.v[i]) * w.psi.v[i]));
  CHECK(worst < 1e-13);
}

TEST_CASE("action values match high-precision root finding") {
  GridSpec g(64, kTwoPi);
  auto out = group_act(oracle_element(g), oracle_wave(g));
  ComplexInterpolant itp(out.psi);
  Complex at1 = itp.at({1.0, 0.0});
  Complex at4 = itp.at({4.0, 0.0});
  CHECK(at1.real() == doctest::Approx(1.1459216183807194).epsilon(1e-9));
  CHECK(at1.imag() == doctest::Approx(0.058619218011076969).epsilon(1e-9));
  CHECK(at4.real() == doctest::Approx(0.84787571246774003).epsilon(1e-9));
  CHECK(at4.imag() == doctest::Approx(-0.026019234112402679).epsilon(1e-9));
}

TEST_CASE("jacobian of the oracle element and inverse consistency") {
  GridSpec g(64, kTwoPi);
  auto e = oracle_element(g);
  auto det = group_element_jacobian(e);
  for (std::size_t i = 0; i < g.size(); ++i)
    CHECK(det.v[i] == doctest::Approx(1.0 + 0.1 * std::cos(g.coord(0, i))).epsilon(1e-12));

  auto inv = invert_diffeomorphism(e);
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    double x = inv[i][0];
    double y = x + 0.1 * std::sin(x);  // g applied to the reported inverse
    double diff = std::remainder(y - g.coord(0, i), kTwoPi);
    worst = std::max(worst, std::abs(diff));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("orientation-reversing displacements are rejected") {
  GridSpec g(64, kTwoPi);
  ScalarField f(g);
  for (std::size_t i = 0; i < g.size(); ++i) f.v[i] = 1.2 * std::sin(g.coord(0, i));
  GroupElement e(from_components(f), ScalarField(g));
  CHECK_THROWS_AS(validate_group_element(e), std::domain_error);
  CHECK_THROWS_AS(group_act(e, oracle_wave(g)), std::domain_error);
}

TEST_CASE("the action is unitary") {
  GridSpec g(64, kTwoPi);
  auto w = oracle_wave(g);
  auto out = group_act(oracle_element(g), w);
  CHECK(l2_norm(out.psi) == doctest::Approx(l2_norm(w.psi)).epsilon(1e-10));
}

TEST_CASE("composition is compatible with the action") {
  GridSpec g(64, kTwoPi);
  ScalarField f1(g), a1(g), f2(g), a2(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    double x = g.coord(0, i);
    f1.v[i] = 0.08 * std::sin(x);
    a1.v[i] = 0.2 * std::cos(x);
    f2.v[i] = 0.05 * std::cos(2 * x);
    a2.v[i] = 0.1 * std::sin(x);
  }
  GroupElement e1(from_components(f1), a1), e2(from_components(f2), a2);
  auto w = oracle_wave(g);
  auto sequential = group_act(e1, group_act(e2, w));
  auto combined = group_act(group_compose(e1, e2), w);
  CHECK(sup_norm(sequential.psi - combined.psi) < 1e-7);
}

TEST_CASE("algebra action matches the analytic formula") {
  GridSpec g(64, kTwoPi);
  auto w = oracle_wave(g);
  auto xi = xi_element(g);
  auto out = algebra_act(xi, w);
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    double x = g.coord(0, i);
    double A = 1.0 + 0.3 * std::cos(x);
    Complex expi = std::polar(1.0, 0.2 * std::sin(x));
    Complex psi = A * expi;
    Complex dpsi = (Complex(-0.3 * std::sin(x), 0.0) +
                    Complex(0.0, A * 0.2 * std::cos(x))) * expi;
    double v = 0.3 * std::sin(x), divv = 0.3 * std::cos(x);
    double alpha = 0.1 + 0.2 * std::cos(x);
    Complex want = -0.5 * divv * psi - Complex(0.0, alpha) * psi - v * dpsi;
    worst = std::max(worst, std::abs(out.v[i] - want));
  }
  CHECK(worst < 1e-11);
}

TEST_CASE("algebra bracket matches the analytic formula") {
  GridSpec g(64, kTwoPi);
  auto b = lie_bracket(xi_element(g), eta_element(g));
  double worst_v = 0.0, worst_a = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    double x = g.coord(0, i);
    // (eta.v d) xi.v - (xi.v d) eta.v = 0.06 identically for these fields
    worst_v = std::max(worst_v, std::abs(b.v.at(0, i) - 0.06));
    double want_a = 0.2 * std::cos(x) * (-0.2 * std::sin(x)) -
                    0.3 * std::sin(x) * (0.6 * std::cos(2 * x));
    worst_a = std::max(worst_a, std::abs(b.alpha.v[i] - want_a));
  }
  CHECK(worst_v < 1e-12);
  CHECK(worst_a < 1e-12);

  auto bf = lie_bracket_flipped(xi_element(g), eta_element(g));
  CHECK(sup_norm(bf.v + b.v) < 1e-14);          // vector part negated
  CHECK(sup_norm(bf.alpha - b.alpha) < 1e-14);  // scalar part unchanged
}

TEST_CASE("moment equals the fluid pairing through the wave-to-fluid map") {
  GridSpec g(64, kTwoPi);
  FieldSampler rng(41);
  for (int k = 0; k < 5; ++k) {
    auto w = rng.wave_function(g, 0.3);
    auto xi = rng.algebra_element(g, 0.5);
    double lhs = moment(xi, w);
    double rhs = pairing(madelung(w), xi);
    CHECK(std::abs(lhs - rhs) < 1e-13 * std::max(1.0, std::abs(lhs)));
  }
  CHECK(moment(xi_element(g), oracle_wave(g)) ==
        doctest::Approx(1.0335839830310420).epsilon(1e-12));
}

TEST_CASE("moment gradient agrees with finite differences") {
  GridSpec g(64, kTwoPi);
  FieldSampler rng(43);
  auto w = rng.wave_function(g, 0.3);
  auto xi = rng.algebra_element(g, 0.5);
  auto F = moment_functional(xi);
  auto fd = fd_gradient_psi(F.evaluate, w);
  CHECK(sup_norm(F.gradient(w) - fd) < 1e-7);
  CHECK(sup_norm(moment_gradient(xi, w) - F.gradient(w)) < 1e-14);
}

TEST_CASE("equivariance holds for the bracket and fails for its flip") {
  GridSpec g(64, kTwoPi);
  auto w = oracle_wave(g);
  auto xi = xi_element(g), eta = eta_element(g);
  CHECK(equivariance_residual(xi, eta, w) < 1e-12);
  CHECK(equivariance_residual_flipped(xi, eta, w) > 1e-3);
}

TEST_CASE("exponential of a constant element is a rigid shift and phase") {
  GridSpec g(64, kTwoPi);
  auto w = oracle_wave(g);
  AlgebraElement xi(VectorField(g, 0.7), ScalarField(g, 0.4));
  const double t = 0.3;
  auto e = approximate_exponential(xi, t);
  auto out = group_act(e, w);
  ComplexInterpolant itp(w.psi);
  double worst = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    Complex want = std::polar(1.0, -t * 0.4) * itp.at({g.coord(0, i) - t * 0.7, 0.0});
    worst = std::max(worst, std::abs(out.psi.v[i] - want));
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("flow derivative at the identity approximates the algebra action") {
  GridSpec g(64, kTwoPi);
  FieldSampler rng(47);
  auto w = rng.wave_function(g, 0.2);
  auto xi = rng.algebra_element(g, 0.3);
  CHECK(flow_derivative_residual(xi, w, 1e-3) < 1e-4);
}

TEST_CASE("pairing is the quadrature of rho alpha + mu . v") {
  GridSpec g(32, kTwoPi);
  FieldSampler rng(53);
  auto s = madelung(rng.wave_function(g, 0.3));
  auto xi = rng.algebra_element(g, 0.5);
  double want = integrate(s.rho * xi.alpha) + integrate(dot(s.mu, xi.v));
  CHECK(pairing(s, xi) == doctest::Approx(want).epsilon(1e-13));
  FluidTangent t(s.mu, s.rho);
  CHECK(pairing(t, xi) == doctest::Approx(want).epsilon(1e-13));
}

}  // TEST_SUITE
