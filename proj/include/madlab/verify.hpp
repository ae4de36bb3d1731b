// Randomized verification suites.  Each suite draws reproducible band-limited
// samples, evaluates one structural identity of the wave/fluid correspondence
// and reports the worst residual against a pinned tolerance.  The tolerances
// live here, in code, so a report can never silently move the goalposts;
// tolerance_scale exists for debugging and only affects the pass flag.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "madlab/grid.hpp"
#include "madlab/states.hpp"

namespace madlab {

struct CheckResult {
  std::string name;
  int samples = 0;
  double max_residual = 0.0;
  double min_residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;  // extra measured numbers, free form
};

// worst-case |X_{M(xi)}(psi) - xi_Psi(psi)| / |xi_Psi(psi)|, 1D and 2D grids
CheckResult momentum_map_suite(std::uint64_t seed, double tolerance_scale = 1.0);

// M([xi,eta]) = {M(xi), M(eta)} plus the power check that the orientation
// with the flipped vector-field bracket visibly fails
std::vector<CheckResult> equivariance_suite(std::uint64_t seed,
                                            double tolerance_scale = 1.0);

// {F o m, G o m}_psi = {F, G}_fluid o m over a pool of moments and
// polynomial fluid functionals
CheckResult poisson_map_suite(std::uint64_t seed, double tolerance_scale = 1.0);

// pushforward of the NLS vector field equals the QHD vector field, one
// result per built-in nonlinearity
std::vector<CheckResult> intertwining_suite(std::uint64_t seed,
                                            double tolerance_scale = 1.0);

// H_nls(psi) = H_fluid(m(psi)) over random non-vacuum states, all models
CheckResult hamiltonian_correspondence_suite(std::uint64_t seed,
                                             double tolerance_scale = 1.0);

// antisymmetry, Jacobi cyclic sum on moment triples, and linear-functional
// reproduction of the fluid bracket
std::vector<CheckResult> bracket_algebra_suite(std::uint64_t seed,
                                               double tolerance_scale = 1.0);

// spectral derivative exactness, integrator convergence orders, and
// finite-difference agreement of the analytic gradients
std::vector<CheckResult> numerics_suite(double tolerance_scale = 1.0);

// unitarity of the action, composition consistency, and the ratio test for
// the derivative of the flow at the identity
std::vector<CheckResult> group_action_suite(std::uint64_t seed,
                                            double tolerance_scale = 1.0);

// conservation monitors over T=1 on the reference wave/fluid data
std::vector<CheckResult> conservation_suite(double tolerance_scale = 1.0);

// joint NLS/QHD run compared through the wave-to-fluid map at final time
CheckResult flow_equivalence_suite(double tolerance_scale = 1.0);

// the identity suites behind the `verify` experiment kind
std::vector<CheckResult> verify_suites(std::uint64_t seed,
                                       double tolerance_scale = 1.0);

// everything, in acceptance order
std::vector<CheckResult> all_suites(std::uint64_t seed,
                                    double tolerance_scale = 1.0);

// initial wave for the reference comparison runs: rho = 1 + 0.2 cos x,
// phase 0.1 sin x on [0, 2pi) with N nodes
WaveFunction reference_wave(int n);

std::string format_check_line(const CheckResult& r);

}  // namespace madlab
