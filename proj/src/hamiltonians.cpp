#include "madlab/hamiltonians.hpp"

#include <cmath>
#include <stdexcept>

namespace madlab {

NonlinearityModel linear_model() {
  return {"linear", [](double) { return 0.0; }, [](double) { return 0.0; }};
}

NonlinearityModel cubic_defocusing_model() {
  return {"cubic", [](double r) { return r; }, [](double r) { return 0.5 * r * r; }};
}

NonlinearityModel gross_pitaevskii_model() {
  return {"gp", [](double r) { return r - 1.0; },
          [](double r) { return 0.5 * r * r - r; }};
}

const std::vector<std::string>& builtin_model_names() {
  static const std::vector<std::string> names = {"linear", "cubic", "gp"};
  return names;
}

NonlinearityModel model_by_name(const std::string& name) {
  if (name == "linear") return linear_model();
  if (name == "cubic") return cubic_defocusing_model();
  if (name == "gp") return gross_pitaevskii_model();
  throw std::invalid_argument("unknown nonlinearity model '" + name + "'");
}

namespace {

ScalarField apply_f(const NonlinearityModel& m, const ScalarField& r) {
  ScalarField out(r.grid);
  for (std::size_t i = 0; i < r.v.size(); ++i) out.v[i] = m.f(r.v[i]);
  return out;
}

ScalarField apply_U(const NonlinearityModel& m, const ScalarField& r) {
  ScalarField out(r.grid);
  for (std::size_t i = 0; i < r.v.size(); ++i) out.v[i] = m.U(r.v[i]);
  return out;
}

void require_above_vacuum(const ScalarField& rho, const char* what) {
  for (double x : rho.v)
    if (!(x >= kRhoMin))
      throw std::domain_error(std::string(what) + ": density below near-vacuum guard");
}

}  // namespace

ComplexField nls_rhs(const WaveFunction& w, const NonlinearityModel& m) {
  ComplexField out = laplacian(w.psi) - 2.0 * (apply_f(m, density(w)) * w.psi);
  out = Complex(0.0, 0.5) * out;
  require_finite(out, "nls_rhs");
  return out;
}

ComplexField nls_energy_gradient(const WaveFunction& w, const NonlinearityModel& m) {
  return -laplacian(w.psi) + 2.0 * (apply_f(m, density(w)) * w.psi);
}

double hamiltonian_nls(const WaveFunction& w, const NonlinearityModel& m) {
  ComplexVectorField gpsi = gradient(w.psi);
  ScalarField kinetic(w.grid());
  for (int a = 0; a < w.grid().dim; ++a) {
    ScalarField ga = abs2(component(gpsi, a));
    for (std::size_t i = 0; i < kinetic.v.size(); ++i) kinetic.v[i] += ga.v[i];
  }
  return integrate(0.5 * kinetic + apply_U(m, density(w)));
}

ScalarField quantum_pressure(const ScalarField& rho) {
  require_finite(rho, "quantum_pressure");
  require_above_vacuum(rho, "quantum_pressure");
  ScalarField root(rho.grid);
  for (std::size_t i = 0; i < rho.v.size(); ++i) root.v[i] = std::sqrt(rho.v[i]);
  return laplacian(root) / (2.0 * root);
}

FluidTangent qhd_rhs(const FluidState& s, const NonlinearityModel& m) {
  require_above_vacuum(s.rho, "qhd_rhs");
  const GridSpec& g = s.grid();

  ScalarField rho_dot = -divergence(s.mu);

  // stress term: component j gets -sum_i d_i(mu_i mu_j / rho)
  VectorField mu_dot(g);
  ScalarField inv_rho(g);
  for (std::size_t i = 0; i < inv_rho.v.size(); ++i) inv_rho.v[i] = 1.0 / s.rho.v[i];
  for (int j = 0; j < g.dim; ++j) {
    ScalarField acc(g);
    for (int i = 0; i < g.dim; ++i) {
      ScalarField flux = inv_rho * (component(s.mu, i) * component(s.mu, j));
      ScalarField d = derivative(flux, i);
      for (std::size_t p = 0; p < acc.v.size(); ++p) acc.v[p] -= d.v[p];
    }
    std::copy(acc.v.begin(), acc.v.end(), mu_dot.v.begin() + j * g.size());
  }

  VectorField pressure_force =
      s.rho * gradient(apply_f(m, s.rho) - quantum_pressure(s.rho));
  mu_dot = mu_dot - pressure_force;

  FluidTangent out(std::move(mu_dot), std::move(rho_dot));
  require_finite(out.mu, "qhd_rhs");
  require_finite(out.rho, "qhd_rhs");
  return out;
}

std::pair<VectorField, ScalarField> qhd_velocity_rhs(const VectorField& v,
                                                     const ScalarField& rho,
                                                     const NonlinearityModel& m) {
  require_same_grid(v.grid, rho.grid, "qhd_velocity_rhs");
  require_above_vacuum(rho, "qhd_velocity_rhs");
  const GridSpec& g = rho.grid;

  // advection (v.grad)v
  VectorField advection(g);
  for (int j = 0; j < g.dim; ++j) {
    ScalarField acc(g);
    for (int i = 0; i < g.dim; ++i) {
      ScalarField d = component(v, i) * derivative(component(v, j), i);
      for (std::size_t p = 0; p < acc.v.size(); ++p) acc.v[p] += d.v[p];
    }
    std::copy(acc.v.begin(), acc.v.end(), advection.v.begin() + j * g.size());
  }

  VectorField v_dot = -advection - gradient(apply_f(m, rho) - quantum_pressure(rho));
  ScalarField rho_dot = -divergence(rho * v);
  return {std::move(v_dot), std::move(rho_dot)};
}

double hamiltonian_cf(const FluidState& s, const NonlinearityModel& m) {
  require_above_vacuum(s.rho, "hamiltonian_cf");
  VectorField grho = gradient(s.rho);
  ScalarField density_term = dot(s.mu, s.mu) + 0.25 * dot(grho, grho);
  ScalarField integrand(s.grid());
  for (std::size_t i = 0; i < integrand.v.size(); ++i)
    integrand.v[i] = 0.5 * density_term.v[i] / s.rho.v[i] + m.U(s.rho.v[i]);
  return integrate(integrand);
}

VectorField hamiltonian_cf_d_mu(const FluidState& s) {
  require_above_vacuum(s.rho, "hamiltonian_cf_d_mu");
  return (1.0 / s.rho) * s.mu;
}

ScalarField hamiltonian_cf_d_rho(const FluidState& s, const NonlinearityModel& m) {
  require_above_vacuum(s.rho, "hamiltonian_cf_d_rho");
  ScalarField out = apply_f(m, s.rho) - quantum_pressure(s.rho);
  ScalarField speed2 = dot(s.mu, s.mu);
  for (std::size_t i = 0; i < out.v.size(); ++i)
    out.v[i] -= 0.5 * speed2.v[i] / (s.rho.v[i] * s.rho.v[i]);
  return out;
}

}  // namespace madlab
