#pragma once
// The semidirect-product symmetry group (diffeomorphisms x phase functions),
// its unitary action on wave functions, the algebra action, the momentum
// map and its equivariance diagnostics.
//
//   group:    ((g,a) psi)(y) = sqrt(|det Dg^{-1}(y)|) e^{-i a(y)} psi(g^{-1}(y))
//   algebra:  xi_Psi(psi) = -(1/2) psi div v - i alpha psi - grad psi . v
//   bracket:  [(u,alpha),(v,beta)] = ((v.grad)u - (u.grad)v,
//                                     v.grad alpha - u.grad beta)
//   moment:   M(xi)(psi) = Re int (conj(psi) psi alpha - i conj(psi) grad psi . v)
//
// Composition follows the left-action convention
// act(compose(e1,e2)) = act(e1) o act(e2), i.e.
// (g1,a1)(g2,a2) = (g1 o g2, a1 + a2 o g1^{-1}).

#include "madlab/brackets.hpp"
#include "madlab/states.hpp"

namespace madlab {

// per-node coordinate tolerance for inverting g = id + f
inline constexpr double kInversionTol = 1e-12;

// Unitary action; requires det(Dg) > 0 at every node.  The inverse of g is
// found per node by the fixed-point iteration x -> y - f(x) with a Newton
// fallback; throws std::runtime_error if neither converges.
WaveFunction group_act(const GroupElement& e, const WaveFunction& w);

// Semidirect product with act(compose(e1,e2)) = act(e1) o act(e2)
GroupElement group_compose(const GroupElement& e1, const GroupElement& e2);

// g^{-1} evaluated at every grid node (exposed for tests)
std::vector<Point> invert_diffeomorphism(const GroupElement& e);

// det(I + Df) at every node (spectral Df); must be positive for a valid element
ScalarField group_element_jacobian(const GroupElement& e);
void validate_group_element(const GroupElement& e);

ComplexField algebra_act(const AlgebraElement& xi, const WaveFunction& w);

AlgebraElement lie_bracket(const AlgebraElement& xi, const AlgebraElement& eta);
// deliberately opposite vector-part orientation; diagnostic only, used to
// confirm the equivariance test has the power to reject the wrong convention
AlgebraElement lie_bracket_flipped(const AlgebraElement& xi, const AlgebraElement& eta);

// <<(mu,rho), (v,alpha)>> = int rho alpha + mu . v
double pairing(const FluidState& s, const AlgebraElement& xi);
double pairing(const FluidTangent& s, const AlgebraElement& xi);

double moment(const AlgebraElement& xi, const WaveFunction& w);
// 2 psi alpha - 2i grad psi . v - i psi div v
ComplexField moment_gradient(const AlgebraElement& xi, const WaveFunction& w);
PsiFunctional moment_functional(const AlgebraElement& xi);

// |moment([xi,eta], w) - {M(xi), M(eta)}(w)| / max(1, |moment([xi,eta], w)|)
double equivariance_residual(const AlgebraElement& xi, const AlgebraElement& eta,
                             const WaveFunction& w);
double equivariance_residual_flipped(const AlgebraElement& xi, const AlgebraElement& eta,
                                     const WaveFunction& w);

// Curve t -> (flow of v over time t, t alpha): tangent to xi at t = 0.
// The diffeomorphism part integrates particle trajectories from every node
// with RK4 and Fourier-interpolated velocity.
GroupElement approximate_exponential(const AlgebraElement& xi, double t,
                                     int rk4_steps = 8);

// sup-norm distance between the central flow difference
// [act(exp(eps xi)) - act(exp(-eps xi))] / (2 eps) and algebra_act(xi, .),
// relative to max(1, sup |algebra_act|); O(eps^2) for smooth data
double flow_derivative_residual(const AlgebraElement& xi, const WaveFunction& w,
                                double eps);

}  // namespace madlab
