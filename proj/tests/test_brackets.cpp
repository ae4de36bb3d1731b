#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "madlab/brackets.hpp"
#include "madlab/madelung.hpp"
#include "madlab/random_fields.hpp"

using namespace madlab;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// same state the frozen constants were computed for:
// psi = (1 + 0.3 cos x) exp(i 0.2 sin x)
WaveFunction oracle_wave(const GridSpec& g) {
  ComplexField f(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    double x = g.coord(0, i);
    f.v[i] = std::polar(1.0 + 0.3 * std::cos(x), 0.2 * std::sin(x));
  }
  return WaveFunction(std::move(f));
}

AlgebraElement xi_element(const GridSpec& g) {  // (0.3 sin x, 0.1 + 0.2 cos x)
  ScalarField v(g), a(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    double x = g.coord(0, i);
    v.v[i] = 0.3 * std::sin(x);
    a.v[i] = 0.1 + 0.2 * std::cos(x);
  }
  return AlgebraElement(from_components(v), a);
}

AlgebraElement eta_element(const GridSpec& g) {  // (0.2 cos x, 0.3 sin 2x)
  ScalarField v(g), a(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    double x = g.coord(0, i);
    v.v[i] = 0.2 * std::cos(x);
    a.v[i] = 0.3 * std::sin(2 * x);
  }
  return AlgebraElement(from_components(v), a);
}

}  // namespace

TEST_SUITE("brackets") {

TEST_CASE("polynomial fluid functionals evaluate to frozen quadrature values") {
  GridSpec g(64, kTwoPi);
  auto s = madelung(oracle_wave(g));
  CHECK(density_power_functional(2).evaluate(s) ==
        doctest::Approx(7.9987305154886328).epsilon(1e-12));
  CHECK(momentum_square_functional().evaluate(s) ==
        doctest::Approx(0.17719367964409831).epsilon(1e-12));
  CHECK(linear_pairing_functional(xi_element(g)).evaluate(s) ==
        doctest::Approx(1.0335839830310420).epsilon(1e-12));
  CHECK(density_power_functional(1).evaluate(s) ==
        doctest::Approx(integrate(s.rho)).epsilon(1e-14));
}

TEST_CASE("weighted functionals match direct quadrature") {
  GridSpec g(32, kTwoPi);
  FieldSampler rng(5);
  auto s = madelung(rng.wave_function(g, 0.3));
  auto c = rng.scalar(g, 0.5);
  auto wv = rng.vector(g, 0.5);
  CHECK(weighted_density_functional(c, 1).evaluate(s) ==
        doctest::Approx(integrate(c * s.rho)).epsilon(1e-13));
  CHECK(weighted_density_functional(c, 2).evaluate(s) ==
        doctest::Approx(integrate(c * s.rho * s.rho)).epsilon(1e-13));
  CHECK(weighted_momentum_functional(wv).evaluate(s) ==
        doctest::Approx(integrate(dot(s.mu, wv))).epsilon(1e-13));
  CHECK(density_momentum_square_functional().evaluate(s) ==
        doctest::Approx(integrate(s.rho * dot(s.mu, s.mu))).epsilon(1e-13));
}

TEST_CASE("analytic variational derivatives agree with finite differences") {
  GridSpec g(64, kTwoPi);
  FieldSampler rng(9);
  auto s = madelung(rng.wave_function(g, 0.2));
  for (const FluidFunctional& F :
       {density_power_functional(3), momentum_square_functional(),
        density_momentum_square_functional()}) {
    auto [dmu, drho] = fd_gradient_fluid(F.evaluate, s);
    CHECK(sup_norm(F.d_mu(s) - dmu) < 1e-6);
    CHECK(sup_norm(F.d_rho(s) - drho) < 1e-6);
  }
}

TEST_CASE("wave-side gradients: mass functional and directional consistency") {
  GridSpec g(64, kTwoPi);
  FieldSampler rng(13);
  auto w = rng.wave_function(g, 0.3);
  auto F = mass_functional();
  // grad int |psi|^2 = 2 psi
  CHECK(sup_norm(F.gradient(w) - 2.0 * w.psi) < 1e-12);
  auto fd = fd_gradient_psi(F.evaluate, w);
  CHECK(sup_norm(F.gradient(w) - fd) < 1e-7);

  auto dir = rng.complex_field(g, 0.4);
  double slope = fd_directional_psi(F.evaluate, w, dir);
  CHECK(slope == doctest::Approx(inner(F.gradient(w), dir)).epsilon(1e-7));
}

TEST_CASE("canonical bracket of two moments matches the frozen value") {
  GridSpec g(64, kTwoPi);
  auto w = oracle_wave(g);
  auto Mxi = linear_pairing_functional(xi_element(g));
  auto Meta = linear_pairing_functional(eta_element(g));
  auto F = pullback_functional(Mxi);
  auto G = pullback_functional(Meta);
  CHECK(pb_psi(F, G, w) == doctest::Approx(0.022619467105846511).epsilon(1e-10));
  CHECK(pb_psi(G, F, w) == doctest::Approx(-0.022619467105846511).epsilon(1e-10));
}

TEST_CASE("fluid bracket reproduces the canonical bracket on pulled-back moments") {
  GridSpec g(64, kTwoPi);
  auto w = oracle_wave(g);
  auto s = madelung(w);
  auto Mxi = linear_pairing_functional(xi_element(g));
  auto Meta = linear_pairing_functional(eta_element(g));
  CHECK(pb_fluid(Mxi, Meta, s) == doctest::Approx(0.022619467105846511).epsilon(1e-10));
}

TEST_CASE("bracket antisymmetry on a mixed pair") {
  GridSpec g(64, kTwoPi);
  FieldSampler rng(21);
  auto w = rng.wave_function(g, 0.3);
  auto F = pullback_functional(density_power_functional(2));
  auto G = nls_hamiltonian_functional(cubic_defocusing_model());
  double fg = pb_psi(F, G, w);
  double gf = pb_psi(G, F, w);
  CHECK(std::abs(fg + gf) < 1e-12 * std::max(1.0, std::abs(fg)));
}

TEST_CASE("functional algebra: scale, sum, product follow Leibniz") {
  GridSpec g(64, kTwoPi);
  FieldSampler rng(23);
  auto w = rng.wave_function(g, 0.3);
  auto F = mass_functional();
  auto G = pullback_functional(density_power_functional(2));
  auto H = pullback_functional(momentum_square_functional());

  auto sF = scale(2.5, F);
  CHECK(sF.evaluate(w) == doctest::Approx(2.5 * F.evaluate(w)).epsilon(1e-14));
  CHECK(pb_psi(sF, H, w) == doctest::Approx(2.5 * pb_psi(F, H, w)).epsilon(1e-11));

  auto FpG = sum(F, G);
  CHECK(pb_psi(FpG, H, w) ==
        doctest::Approx(pb_psi(F, H, w) + pb_psi(G, H, w)).epsilon(1e-11));

  auto FG = product(F, G);
  CHECK(FG.evaluate(w) == doctest::Approx(F.evaluate(w) * G.evaluate(w)).epsilon(1e-14));
  double want = F.evaluate(w) * pb_psi(G, H, w) + G.evaluate(w) * pb_psi(F, H, w);
  CHECK(pb_psi(FG, H, w) == doctest::Approx(want).epsilon(1e-10));
}

TEST_CASE("Hamiltonian vector field drives dG along the bracket") {
  GridSpec g(64, kTwoPi);
  FieldSampler rng(29);
  auto w = rng.wave_function(g, 0.3);
  auto F = nls_hamiltonian_functional(gross_pitaevskii_model());
  auto G = mass_functional();
  auto X = hamiltonian_vector_field_psi(F, w);
  // dG(X_F) = {G, F}
  double lhs = inner(G.gradient(w), X);
  CHECK(lhs == doctest::Approx(pb_psi(G, F, w)).epsilon(1e-11));
}

}  // TEST_SUITE
