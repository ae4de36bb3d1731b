#include "madlab/states.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "madlab/madelung.hpp"

namespace madlab {

WaveFunction::WaveFunction(ComplexField f) : psi(std::move(f)) {
  require_finite(psi, "WaveFunction");
}

FluidState::FluidState(VectorField m, ScalarField r)
    : mu(std::move(m)), rho(std::move(r)) {
  require_same_grid(mu.grid, rho.grid, "FluidState");
  require_finite(mu, "FluidState.mu");
  require_finite(rho, "FluidState.rho");
  for (double x : rho.v)
    if (!(x > 0.0))
      throw std::domain_error("FluidState: density must be strictly positive");
}

FluidTangent::FluidTangent(VectorField m, ScalarField r)
    : mu(std::move(m)), rho(std::move(r)) {
  require_same_grid(mu.grid, rho.grid, "FluidTangent");
}

FluidTangent operator+(const FluidTangent& a, const FluidTangent& b) {
  return {a.mu + b.mu, a.rho + b.rho};
}

FluidTangent operator-(const FluidTangent& a, const FluidTangent& b) {
  return {a.mu - b.mu, a.rho - b.rho};
}

FluidTangent operator*(double c, const FluidTangent& a) {
  return {c * a.mu, c * a.rho};
}

PolarDecomposition::PolarDecomposition(ScalarField r, ScalarField t)
    : rho(std::move(r)), tau(std::move(t)) {
  require_same_grid(rho.grid, tau.grid, "PolarDecomposition");
  require_finite(rho, "PolarDecomposition.rho");
  require_finite(tau, "PolarDecomposition.tau");
  for (double x : rho.v)
    if (!(x > 0.0))
      throw std::domain_error("PolarDecomposition: density must be strictly positive");
  // canonical representative: the overall phase lives in the wave function
  tau = tau + (-mean(tau));
}

AlgebraElement::AlgebraElement(VectorField vel, ScalarField a)
    : v(std::move(vel)), alpha(std::move(a)) {
  require_same_grid(v.grid, alpha.grid, "AlgebraElement");
  require_finite(v, "AlgebraElement.v");
  require_finite(alpha, "AlgebraElement.alpha");
}

GroupElement::GroupElement(VectorField f, ScalarField a)
    : displacement(std::move(f)), phase(std::move(a)) {
  require_same_grid(displacement.grid, phase.grid, "GroupElement");
  require_finite(displacement, "GroupElement.displacement");
  require_finite(phase, "GroupElement.phase");
}

GroupElement group_identity(const GridSpec& g) {
  return GroupElement(VectorField(g), ScalarField(g));
}

ScalarField density(const WaveFunction& w) { return abs2(w.psi); }

double min_density(const WaveFunction& w) {
  double m = std::numeric_limits<double>::infinity();
  for (const Complex& z : w.psi.v) m = std::min(m, std::norm(z));
  return m;
}

VectorField momentum_density(const WaveFunction& w) {
  return imag_part(conj(w.psi) * gradient(w.psi));
}

WaveFunction from_polar(const PolarDecomposition& p) {
  ComplexField psi(p.grid());
  for (std::size_t i = 0; i < psi.v.size(); ++i)
    psi.v[i] = std::polar(std::sqrt(p.rho.v[i]), p.tau.v[i]);
  return WaveFunction(std::move(psi));
}

WaveFunction from_polar(const ScalarField& rho, const ScalarField& tau) {
  return from_polar(PolarDecomposition(rho, tau));
}

PolarDecomposition to_polar(const WaveFunction& w) {
  if (min_density(w) < kRhoMin)
    throw std::domain_error("to_polar: wave function is near-vacuum");
  for (int wn : winding_numbers(w))
    if (wn != 0)
      throw std::domain_error("to_polar: nonzero winding, no single-valued phase");

  const GridSpec& g = w.grid();
  ScalarField rho = density(w);
  VectorField gradtau = (1.0 / rho) * momentum_density(w);

  // solve grad tau = mu/rho in the least-squares sense:
  // tau_k = -i k . w_k / |k|^2, zero mean
  std::vector<std::vector<Complex>> comp_coeffs(g.dim);
  for (int a = 0; a < g.dim; ++a)
    comp_coeffs[a] = fourier_coefficients(component(gradtau, a));

  const int n0 = g.n[0];
  const int n1 = g.dim == 2 ? g.n[1] : 1;
  std::vector<Complex> tau_coeffs(g.size(), Complex(0.0));
  for (int i0 = 0; i0 < n0; ++i0) {
    for (int i1 = 0; i1 < n1; ++i1) {
      std::size_t idx = static_cast<std::size_t>(i0) * n1 + i1;
      double k0 = wavenumber(g, 0, i0);
      double k1 = g.dim == 2 ? wavenumber(g, 1, i1) : 0.0;
      double k2 = k0 * k0 + k1 * k1;
      if (k2 == 0.0) continue;
      Complex kw = k0 * comp_coeffs[0][idx];
      if (g.dim == 2) kw += k1 * comp_coeffs[1][idx];
      tau_coeffs[idx] = Complex(0.0, -1.0) * kw / k2;
    }
  }
  ScalarField tau = real_part(field_from_coefficients(g, tau_coeffs));
  return PolarDecomposition(std::move(rho), std::move(tau));
}

double global_phase_distance(const WaveFunction& a, const WaveFunction& b) {
  Complex overlap = inner_complex(b.psi, a.psi);
  Complex phase = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
  double nb = l2_norm(b.psi);
  return l2_norm(a.psi - phase * b.psi) / (nb > 0.0 ? nb : 1.0);
}

double fluid_rel_l2_distance(const FluidState& a, const FluidState& b) {
  require_same_grid(a.grid(), b.grid(), "fluid_rel_l2_distance");
  double dmu = l2_norm(a.mu - b.mu);
  double drho = l2_norm(a.rho - b.rho);
  double nmu = l2_norm(b.mu);
  double nrho = l2_norm(b.rho);
  double denom = std::sqrt(nmu * nmu + nrho * nrho);
  return std::sqrt(dmu * dmu + drho * drho) / (denom > 0.0 ? denom : 1.0);
}

}  // namespace madlab
