#pragma once
// The Madelung transform m(psi) = (Im(conj(psi) grad psi), |psi|^2) and its
// tangent map, the pullback of fluid functionals along it, the
// NLS/QHD intertwining residual, and winding numbers of the phase.

#include "madlab/brackets.hpp"
#include "madlab/hamiltonians.hpp"
#include "madlab/states.hpp"

namespace madlab {

// requires |psi|^2 > 0 everywhere (FluidState invariant)
FluidState madelung(const WaveFunction& w);

// tangent map at psi in direction phi:
// (Im(conj(psi) grad phi + conj(phi) grad psi), 2 Re(conj(psi) phi))
FluidTangent pushforward(const WaveFunction& w, const ComplexField& phi);

// F o m as a wave-function functional; chain-rule gradient
// 2 (dF/drho) psi - i div(psi dF/dmu) - i (dF/dmu) . grad psi
// with the variational derivatives evaluated at m(psi)
PsiFunctional pullback_functional(const FluidFunctional& F);

// residual of pushforward(nls_rhs) against qhd_rhs(m(psi)); norms are
// relative to max(|lhs|, |rhs|, floor) so exact zeros report zero
struct IntertwineResidual {
  double rel_sup = 0.0;  // sup norm over both components
  double rel_l2 = 0.0;
  double scale = 0.0;    // sup norm of the larger side
};
IntertwineResidual intertwine_check(const WaveFunction& w, const NonlinearityModel& m);

// circulation of Im(conj(psi) grad psi)/|psi|^2 around each fundamental
// cycle, averaged over transverse lines and divided by 2 pi; requires the
// pre-rounding values within kWindingTol of an integer and min |psi|^2
// >= kRhoMin
inline constexpr double kWindingTol = 1e-6;
std::vector<int> winding_numbers(const WaveFunction& w);

}  // namespace madlab
