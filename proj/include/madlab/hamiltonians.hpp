#pragma once
// Nonlinearity models and the two Hamiltonian systems:
//
//   NLS   d/dt psi = (i/2) (lap psi - 2 f(|psi|^2) psi)
//   QHD   d/dt rho = -div mu
//         d/dt mu_j = -sum_i d_i((1/rho) mu_i mu_j) - rho d_j(f(rho) - P(rho))
//
// with quantum pressure P(rho) = lap(sqrt rho) / (2 sqrt rho) and energies
//   H_NLS = int 1/2 |grad psi|^2 + U(|psi|^2),   U' = f
//   H_CF  = int |mu|^2/(2 rho) + |grad rho|^2/(8 rho) + U(rho).

#include <functional>
#include <string>
#include <vector>

#include "madlab/states.hpp"

namespace madlab {

struct NonlinearityModel {
  std::string name;
  std::function<double(double)> f;  // f(r)
  std::function<double(double)> U;  // potential energy density, U' = f, U(0) = 0
};

NonlinearityModel linear_model();             // f = 0
NonlinearityModel cubic_defocusing_model();   // f(r) = r
NonlinearityModel gross_pitaevskii_model();   // f(r) = r - 1
NonlinearityModel model_by_name(const std::string& name);
const std::vector<std::string>& builtin_model_names();

ComplexField nls_rhs(const WaveFunction& w, const NonlinearityModel& m);
double hamiltonian_nls(const WaveFunction& w, const NonlinearityModel& m);
// L2 gradient of H_NLS: -lap psi + 2 f(|psi|^2) psi
ComplexField nls_energy_gradient(const WaveFunction& w, const NonlinearityModel& m);

// requires min rho >= kRhoMin
ScalarField quantum_pressure(const ScalarField& rho);
FluidTangent qhd_rhs(const FluidState& s, const NonlinearityModel& m);
// velocity form on (v, rho): dv/dt = -(v.grad)v - grad(f(rho) - P(rho)),
// d rho/dt = -div(rho v)
std::pair<VectorField, ScalarField> qhd_velocity_rhs(const VectorField& v,
                                                     const ScalarField& rho,
                                                     const NonlinearityModel& m);
double hamiltonian_cf(const FluidState& s, const NonlinearityModel& m);

// variational derivatives of H_CF: dH/dmu = mu/rho,
// dH/drho = -|mu|^2/(2 rho^2) + f(rho) - P(rho)
VectorField hamiltonian_cf_d_mu(const FluidState& s);
ScalarField hamiltonian_cf_d_rho(const FluidState& s, const NonlinearityModel& m);

}  // namespace madlab
