#include "madlab/brackets.hpp"

#include <cmath>
#include <stdexcept>

namespace madlab {

double pb_psi(const PsiFunctional& F, const PsiFunctional& G, const WaveFunction& w) {
  ComplexField gf = F.gradient(w);
  ComplexField gg = G.gradient(w);
  return inner(gf, Complex(0.0, -0.5) * gg);
}

ComplexField hamiltonian_vector_field_psi(const PsiFunctional& F, const WaveFunction& w) {
  return Complex(0.0, -0.5) * F.gradient(w);
}

double pb_fluid(const FluidFunctional& F, const FluidFunctional& G, const FluidState& s) {
  const GridSpec& g = s.grid();
  VectorField uF = F.d_mu(s);
  VectorField uG = G.d_mu(s);
  ScalarField rF = F.d_rho(s);
  ScalarField rG = G.d_rho(s);

  // (w.grad) acting on vector and scalar fields
  auto advect_vec = [&g](const VectorField& w, const VectorField& u) {
    VectorField out(g);
    for (int j = 0; j < g.dim; ++j) {
      ScalarField acc(g);
      for (int i = 0; i < g.dim; ++i) {
        ScalarField d = component(w, i) * derivative(component(u, j), i);
        for (std::size_t p = 0; p < acc.v.size(); ++p) acc.v[p] += d.v[p];
      }
      std::copy(acc.v.begin(), acc.v.end(), out.v.begin() + j * g.size());
    }
    return out;
  };
  auto advect_scalar = [&g](const VectorField& w, const ScalarField& f) {
    return dot(w, gradient(f));
  };

  ScalarField momentum_part = dot(s.mu, advect_vec(uG, uF) - advect_vec(uF, uG));
  ScalarField density_part =
      s.rho * (advect_scalar(uG, rF) - advect_scalar(uF, rG));
  return integrate(momentum_part + density_part);
}

// ---- finite differences ------------------------------------------------------

ComplexField fd_gradient_psi(const std::function<double(const WaveFunction&)>& F,
                             const WaveFunction& w, double eps) {
  const double weight = w.grid().cell_volume();
  ComplexField out(w.grid());
  WaveFunction probe = w;
  for (std::size_t i = 0; i < out.v.size(); ++i) {
    Complex orig = probe.psi.v[i];
    probe.psi.v[i] = orig + eps;
    double fp = F(probe);
    probe.psi.v[i] = orig - eps;
    double fm = F(probe);
    double d_re = (fp - fm) / (2.0 * eps);
    probe.psi.v[i] = orig + Complex(0.0, eps);
    fp = F(probe);
    probe.psi.v[i] = orig - Complex(0.0, eps);
    fm = F(probe);
    double d_im = (fp - fm) / (2.0 * eps);
    probe.psi.v[i] = orig;
    out.v[i] = Complex(d_re, d_im) / weight;
  }
  return out;
}

std::pair<VectorField, ScalarField> fd_gradient_fluid(
    const std::function<double(const FluidState&)>& F, const FluidState& s, double eps) {
  const double weight = s.grid().cell_volume();
  VectorField dmu(s.grid());
  ScalarField drho(s.grid());
  FluidState probe = s;
  for (std::size_t i = 0; i < probe.mu.v.size(); ++i) {
    double orig = probe.mu.v[i];
    probe.mu.v[i] = orig + eps;
    double fp = F(probe);
    probe.mu.v[i] = orig - eps;
    double fm = F(probe);
    probe.mu.v[i] = orig;
    dmu.v[i] = (fp - fm) / (2.0 * eps * weight);
  }
  for (std::size_t i = 0; i < probe.rho.v.size(); ++i) {
    double orig = probe.rho.v[i];
    probe.rho.v[i] = orig + eps;
    double fp = F(probe);
    probe.rho.v[i] = orig - eps;
    double fm = F(probe);
    probe.rho.v[i] = orig;
    drho.v[i] = (fp - fm) / (2.0 * eps * weight);
  }
  return {std::move(dmu), std::move(drho)};
}

double fd_directional_psi(const std::function<double(const WaveFunction&)>& F,
                          const WaveFunction& w, const ComplexField& dir, double eps) {
  WaveFunction plus = w, minus = w;
  plus.psi = w.psi + eps * dir;
  minus.psi = w.psi - eps * dir;
  return (F(plus) - F(minus)) / (2.0 * eps);
}

// ---- functional library --------------------------------------------------------

PsiFunctional mass_functional() {
  return {"mass",
          [](const WaveFunction& w) { return integrate(density(w)); },
          [](const WaveFunction& w) { return 2.0 * w.psi; }};
}

PsiFunctional nls_hamiltonian_functional(const NonlinearityModel& m) {
  return {"h_nls:" + m.name,
          [m](const WaveFunction& w) { return hamiltonian_nls(w, m); },
          [m](const WaveFunction& w) { return nls_energy_gradient(w, m); }};
}

PsiFunctional scale(double c, const PsiFunctional& F) {
  return {"scale(" + F.name + ")",
          [c, F](const WaveFunction& w) { return c * F.evaluate(w); },
          [c, F](const WaveFunction& w) { return c * F.gradient(w); }};
}

PsiFunctional sum(const PsiFunctional& F, const PsiFunctional& G) {
  return {F.name + "+" + G.name,
          [F, G](const WaveFunction& w) { return F.evaluate(w) + G.evaluate(w); },
          [F, G](const WaveFunction& w) { return F.gradient(w) + G.gradient(w); }};
}

PsiFunctional product(const PsiFunctional& F, const PsiFunctional& G) {
  return {F.name + "*" + G.name,
          [F, G](const WaveFunction& w) { return F.evaluate(w) * G.evaluate(w); },
          [F, G](const WaveFunction& w) {
            return F.evaluate(w) * G.gradient(w) + G.evaluate(w) * F.gradient(w);
          }};
}

FluidFunctional cf_hamiltonian_functional(const NonlinearityModel& m) {
  return {"h_cf:" + m.name,
          [m](const FluidState& s) { return hamiltonian_cf(s, m); },
          [](const FluidState& s) { return hamiltonian_cf_d_mu(s); },
          [m](const FluidState& s) { return hamiltonian_cf_d_rho(s, m); }};
}

FluidFunctional linear_pairing_functional(const AlgebraElement& xi) {
  return {"pairing",
          [xi](const FluidState& s) {
            return integrate(s.rho * xi.alpha + dot(s.mu, xi.v));
          },
          [xi](const FluidState&) { return xi.v; },
          [xi](const FluidState&) { return xi.alpha; }};
}

FluidFunctional density_power_functional(int p) {
  if (p < 1) throw std::invalid_argument("density_power_functional: p must be >= 1");
  auto powp = [p](double r) { return std::pow(r, p); };
  return {"rho^" + std::to_string(p),
          [powp](const FluidState& s) {
            ScalarField f(s.grid());
            for (std::size_t i = 0; i < f.v.size(); ++i) f.v[i] = powp(s.rho.v[i]);
            return integrate(f);
          },
          [](const FluidState& s) { return VectorField(s.grid()); },
          [p](const FluidState& s) {
            ScalarField f(s.grid());
            for (std::size_t i = 0; i < f.v.size(); ++i)
              f.v[i] = p * std::pow(s.rho.v[i], p - 1);
            return f;
          }};
}

FluidFunctional momentum_square_functional() {
  return {"|mu|^2",
          [](const FluidState& s) { return integrate(dot(s.mu, s.mu)); },
          [](const FluidState& s) { return 2.0 * s.mu; },
          [](const FluidState& s) { return ScalarField(s.grid()); }};
}

FluidFunctional weighted_density_functional(const ScalarField& c, int p) {
  if (p < 1) throw std::invalid_argument("weighted_density_functional: p must be >= 1");
  return {"c*rho^" + std::to_string(p),
          [c, p](const FluidState& s) {
            ScalarField f(s.grid());
            for (std::size_t i = 0; i < f.v.size(); ++i)
              f.v[i] = c.v[i] * std::pow(s.rho.v[i], p);
            return integrate(f);
          },
          [](const FluidState& s) { return VectorField(s.grid()); },
          [c, p](const FluidState& s) {
            ScalarField f(s.grid());
            for (std::size_t i = 0; i < f.v.size(); ++i)
              f.v[i] = c.v[i] * p * std::pow(s.rho.v[i], p - 1);
            return f;
          }};
}

FluidFunctional weighted_momentum_functional(const VectorField& w) {
  return {"mu.w",
          [w](const FluidState& s) { return integrate(dot(s.mu, w)); },
          [w](const FluidState&) { return w; },
          [](const FluidState& s) { return ScalarField(s.grid()); }};
}

FluidFunctional density_momentum_square_functional() {
  return {"rho|mu|^2",
          [](const FluidState& s) { return integrate(s.rho * dot(s.mu, s.mu)); },
          [](const FluidState& s) { return 2.0 * (s.rho * s.mu); },
          [](const FluidState& s) { return dot(s.mu, s.mu); }};
}

}  // namespace madlab
