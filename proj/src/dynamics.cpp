#include "madlab/dynamics.hpp"

#include <cmath>

namespace madlab {

WaveFunction axpy(const WaveFunction& y, double c, const ComplexField& d) {
  require_same_grid(y.grid(), d.grid, "axpy");
  ComplexField out = y.psi;
  for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] += c * d.v[i];
  require_finite(out, "axpy");
  return WaveFunction{std::move(out)};
}

FluidState axpy(const FluidState& y, double c, const FluidTangent& d) {
  require_same_grid(y.grid(), d.grid(), "axpy");
  VectorField mu = y.mu;
  ScalarField rho = y.rho;
  for (std::size_t i = 0; i < mu.v.size(); ++i) mu.v[i] += c * d.mu.v[i];
  for (std::size_t i = 0; i < rho.v.size(); ++i) rho.v[i] += c * d.rho.v[i];
  // the FluidState constructor rejects non-positive density, which is the
  // blow-up signal the trajectory driver listens for
  return FluidState(std::move(mu), std::move(rho));
}

WaveFunction step_strang_nls(const WaveFunction& y, const NonlinearityModel& model,
                             double dt) {
  const GridSpec& g = y.grid();

  auto half_phase = [&](ComplexField& f) {
    for (auto& z : f.v) {
      double r = std::norm(z);
      z *= std::polar(1.0, -0.5 * dt * model.f(r));
    }
  };

  ComplexField psi = y.psi;
  half_phase(psi);

  // exact linear flow: each mode rotates by exp(-i dt |k|^2 / 2)
  std::vector<Complex> coeffs = fourier_coefficients(psi);
  if (g.dim == 1) {
    for (int i = 0; i < g.n[0]; ++i) {
      double k = wavenumber(g, 0, i);
      coeffs[i] *= std::polar(1.0, -0.5 * dt * k * k);
    }
  } else {
    for (int i0 = 0; i0 < g.n[0]; ++i0)
      for (int i1 = 0; i1 < g.n[1]; ++i1) {
        double k0 = wavenumber(g, 0, i0);
        double k1 = wavenumber(g, 1, i1);
        coeffs[g.flat_index(i0, i1)] *= std::polar(1.0, -0.5 * dt * (k0 * k0 + k1 * k1));
      }
  }
  psi = field_from_coefficients(g, coeffs);

  half_phase(psi);
  require_finite(psi, "step_strang_nls");
  return WaveFunction{std::move(psi)};
}

}  // namespace madlab
