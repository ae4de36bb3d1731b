#pragma once
// Functionals and Poisson brackets on the two phase spaces.
//
// Wave-function side: real functionals F(psi) with an L2 gradient taken
// with respect to <f,g> = Re int conj(f) g dx, canonical bracket
//   {F,G}(psi) = <grad F, -(i/2) grad G>,
// Hamiltonian vector field X_F = -(i/2) grad F, oriented so that
// dG(X_F) = {G,F}.
//
// Fluid side: functionals F(mu, rho) with variational derivatives
// (dF/dmu, dF/drho) and the compressible-fluid Lie-Poisson bracket.

#include <functional>
#include <string>

#include "madlab/hamiltonians.hpp"
#include "madlab/states.hpp"

namespace madlab {

struct PsiFunctional {
  std::string name;
  std::function<double(const WaveFunction&)> evaluate;
  std::function<ComplexField(const WaveFunction&)> gradient;
};

struct FluidFunctional {
  std::string name;
  std::function<double(const FluidState&)> evaluate;
  std::function<VectorField(const FluidState&)> d_mu;
  std::function<ScalarField(const FluidState&)> d_rho;
};

double pb_psi(const PsiFunctional& F, const PsiFunctional& G, const WaveFunction& w);
ComplexField hamiltonian_vector_field_psi(const PsiFunctional& F, const WaveFunction& w);

// {F,G}(mu,rho) = int mu . [(dG/dmu . grad) dF/dmu - (dF/dmu . grad) dG/dmu]
//               + int rho  [(dG/dmu . grad) dF/drho - (dF/dmu . grad) dG/drho]
double pb_fluid(const FluidFunctional& F, const FluidFunctional& G, const FluidState& s);

// ---- finite-difference variational derivatives (test oracles) -------------

// per-node central differences with the quadrature weight divided out;
// O(eps^2) accurate
ComplexField fd_gradient_psi(const std::function<double(const WaveFunction&)>& F,
                             const WaveFunction& w, double eps = 1e-5);
std::pair<VectorField, ScalarField> fd_gradient_fluid(
    const std::function<double(const FluidState&)>& F, const FluidState& s,
    double eps = 1e-5);
// directional spot check: d/dt F(psi + t dir) at t = 0
double fd_directional_psi(const std::function<double(const WaveFunction&)>& F,
                          const WaveFunction& w, const ComplexField& dir,
                          double eps = 1e-5);

// ---- functional library ----------------------------------------------------

PsiFunctional mass_functional();                                     // int |psi|^2
PsiFunctional nls_hamiltonian_functional(const NonlinearityModel& m);
PsiFunctional scale(double c, const PsiFunctional& F);
PsiFunctional sum(const PsiFunctional& F, const PsiFunctional& G);
PsiFunctional product(const PsiFunctional& F, const PsiFunctional& G);

FluidFunctional cf_hamiltonian_functional(const NonlinearityModel& m);
FluidFunctional linear_pairing_functional(const AlgebraElement& xi);  // <<(mu,rho), xi>>
FluidFunctional density_power_functional(int p);                      // int rho^p, p >= 1
FluidFunctional momentum_square_functional();                         // int |mu|^2
FluidFunctional weighted_density_functional(const ScalarField& c, int p);  // int c rho^p
FluidFunctional weighted_momentum_functional(const VectorField& w);   // int mu . w
FluidFunctional density_momentum_square_functional();                 // int rho |mu|^2

}  // namespace madlab
