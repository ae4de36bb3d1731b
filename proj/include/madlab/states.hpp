#pragma once
// State types for the two sides of the correspondence: wave functions on
// the torus and fluid states (momentum density mu, mass density rho),
// plus polar decomposition, semidirect-product algebra and group elements.
//
// Densities are strictly positive on FluidState and PolarDecomposition;
// tangent data (time derivatives, variations) is carried by FluidTangent,
// which is unconstrained.

#include <utility>

#include "madlab/grid.hpp"

namespace madlab {

// shared near-vacuum guard: polar recovery and fluid right-hand sides
// require min density >= kRhoMin
inline constexpr double kRhoMin = 1e-8;

struct WaveFunction {
  ComplexField psi;

  WaveFunction() = default;
  explicit WaveFunction(ComplexField f);
  const GridSpec& grid() const { return psi.grid; }
};

struct FluidState {
  VectorField mu;
  ScalarField rho;

  FluidState() = default;
  FluidState(VectorField m, ScalarField r);  // requires rho > 0 everywhere
  const GridSpec& grid() const { return rho.grid; }
};

// unvalidated (mu, rho) pair: tangents, RHS values, residuals
struct FluidTangent {
  VectorField mu;
  ScalarField rho;

  FluidTangent() = default;
  FluidTangent(VectorField m, ScalarField r);
  const GridSpec& grid() const { return rho.grid; }
};

FluidTangent operator+(const FluidTangent& a, const FluidTangent& b);
FluidTangent operator-(const FluidTangent& a, const FluidTangent& b);
FluidTangent operator*(double c, const FluidTangent& a);

struct PolarDecomposition {
  ScalarField rho;  // > 0 everywhere
  ScalarField tau;  // stored as the mean-zero representative

  PolarDecomposition() = default;
  PolarDecomposition(ScalarField r, ScalarField t);
  const GridSpec& grid() const { return rho.grid; }
};

// element (v, alpha) of the semidirect-product algebra: velocity field and
// infinitesimal phase
struct AlgebraElement {
  VectorField v;
  ScalarField alpha;

  AlgebraElement() = default;
  AlgebraElement(VectorField vel, ScalarField a);
  const GridSpec& grid() const { return alpha.grid; }
};

// group element (g, a) with g = id + displacement (periodic displacement,
// det Dg > 0) and phase function a
struct GroupElement {
  VectorField displacement;
  ScalarField phase;

  GroupElement() = default;
  GroupElement(VectorField f, ScalarField a);
  const GridSpec& grid() const { return phase.grid; }
};

GroupElement group_identity(const GridSpec& g);

// ---- polar correspondence -------------------------------------------------

ScalarField density(const WaveFunction& w);   // |psi|^2
double min_density(const WaveFunction& w);
VectorField momentum_density(const WaveFunction& w);  // Im(conj(psi) grad psi)

// psi = sqrt(rho) exp(i tau)
WaveFunction from_polar(const PolarDecomposition& p);
WaveFunction from_polar(const ScalarField& rho, const ScalarField& tau);

// Recover (rho, tau) with tau the mean-zero spectral antiderivative of the
// curl-free part of mu/rho.  Errors: near-vacuum (min |psi|^2 < kRhoMin) and
// nonzero winding on some axis, both std::domain_error.
PolarDecomposition to_polar(const WaveFunction& w);

// distance between a and exp(i theta) b minimized over the global phase
// theta, relative to ||b||; theta* = arg <b, a>
double global_phase_distance(const WaveFunction& a, const WaveFunction& b);

double fluid_rel_l2_distance(const FluidState& a, const FluidState& b);

}  // namespace madlab
