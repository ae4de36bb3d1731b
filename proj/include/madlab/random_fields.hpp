// Reproducible random smooth fields.  Draws are band limited (modes up to
// n/8 per axis by default) with 1/(1+|m|^2) coefficient decay, so every
// product appearing in the verification integrands stays resolved on the
// grid.  The uniform doubles come from the raw mt19937_64 stream rather
// than std::uniform_real_distribution, which keeps streams identical
// across standard library implementations.

#pragma once

#include <cstdint>
#include <random>

#include "madlab/grid.hpp"
#include "madlab/states.hpp"

namespace madlab {

class FieldSampler {
 public:
  explicit FieldSampler(std::uint64_t seed) : rng_(seed) {}

  // uniform in [-1, 1)
  double symmetric_uniform();

  // real band-limited field with zero mean, sup norm roughly `amplitude`
  ScalarField scalar(const GridSpec& g, double amplitude, int max_mode = 0);

  // complex band-limited field, both parts drawn independently
  ComplexField complex_field(const GridSpec& g, double amplitude, int max_mode = 0);

  // one band-limited component per axis
  VectorField vector(const GridSpec& g, double amplitude, int max_mode = 0);

  // psi = 1 + perturbation, guaranteed bounded away from vacuum
  WaveFunction wave_function(const GridSpec& g, double amplitude, int max_mode = 0);

  // velocity + phase-shift pair
  AlgebraElement algebra_element(const GridSpec& g, double amplitude, int max_mode = 0);

  // small diffeomorphism-plus-phase: displacement kept small enough that
  // id + f is invertible with a healthy margin
  GroupElement group_element(const GridSpec& g, double displacement_amplitude = 0.05,
                             double phase_amplitude = 0.3, int max_mode = 0);

 private:
  std::mt19937_64 rng_;
};

}  // namespace madlab
