#include "madlab/random_fields.hpp"

#include <cmath>

namespace madlab {

namespace {

int default_max_mode(const GridSpec& g, int requested) {
  if (requested > 0) return requested;
  int n_min = g.n[0];
  if (g.dim == 2) n_min = std::min(n_min, g.n[1]);
  return std::max(1, n_min / 8);
}

}  // namespace

double FieldSampler::symmetric_uniform() {
  // 53 high bits -> [0,1), shifted to [-1,1)
  double u = (rng_() >> 11) * 0x1.0p-53;
  return 2.0 * u - 1.0;
}

ScalarField FieldSampler::scalar(const GridSpec& g, double amplitude, int max_mode) {
  const int mmax = default_max_mode(g, max_mode);
  ScalarField out(g);
  // accumulate real cos/sin modes; weight falls off quadratically in |m|
  auto add_mode = [&](int m0, int m1) {
    if (m0 == 0 && m1 == 0) return;
    double misq = double(m0) * m0 + double(m1) * m1;
    double weight = amplitude / (1.0 + misq);
    double ca = weight * symmetric_uniform();
    double cb = weight * symmetric_uniform();
    for (std::size_t i = 0; i < out.v.size(); ++i) {
      double phase = 2.0 * M_PI * m0 * g.coord(0, i) / g.length[0];
      if (g.dim == 2) phase += 2.0 * M_PI * m1 * g.coord(1, i) / g.length[1];
      out.v[i] += ca * std::cos(phase) + cb * std::sin(phase);
    }
  };
  if (g.dim == 1) {
    for (int m0 = 1; m0 <= mmax; ++m0) add_mode(m0, 0);
  } else {
    // half-plane of modes so conjugate pairs are not drawn twice
    for (int m0 = 0; m0 <= mmax; ++m0)
      for (int m1 = -mmax; m1 <= mmax; ++m1) {
        if (m0 == 0 && m1 <= 0) continue;
        add_mode(m0, m1);
      }
  }
  return out;
}

ComplexField FieldSampler::complex_field(const GridSpec& g, double amplitude,
                                         int max_mode) {
  ScalarField re = scalar(g, amplitude, max_mode);
  ScalarField im = scalar(g, amplitude, max_mode);
  ComplexField out(g);
  for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] = Complex(re.v[i], im.v[i]);
  return out;
}

VectorField FieldSampler::vector(const GridSpec& g, double amplitude, int max_mode) {
  if (g.dim == 1) return from_components(scalar(g, amplitude, max_mode));
  ScalarField c0 = scalar(g, amplitude, max_mode);
  ScalarField c1 = scalar(g, amplitude, max_mode);
  return from_components(c0, c1);
}

WaveFunction FieldSampler::wave_function(const GridSpec& g, double amplitude,
                                         int max_mode) {
  ComplexField d = complex_field(g, amplitude, max_mode);
  ComplexField psi(g, Complex(1.0, 0.0));
  for (std::size_t i = 0; i < psi.v.size(); ++i) psi.v[i] += d.v[i];
  return WaveFunction{std::move(psi)};
}

AlgebraElement FieldSampler::algebra_element(const GridSpec& g, double amplitude,
                                             int max_mode) {
  VectorField v = vector(g, amplitude, max_mode);
  ScalarField alpha = scalar(g, amplitude, max_mode);
  return AlgebraElement(std::move(v), std::move(alpha));
}

GroupElement FieldSampler::group_element(const GridSpec& g,
                                         double displacement_amplitude,
                                         double phase_amplitude, int max_mode) {
  VectorField f = vector(g, displacement_amplitude, max_mode);
  ScalarField a = scalar(g, phase_amplitude, max_mode);
  return GroupElement(std::move(f), std::move(a));
}

}  // namespace madlab
