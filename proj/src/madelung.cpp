#include "madlab/madelung.hpp"

#include <cmath>
#include <stdexcept>

namespace madlab {

FluidState madelung(const WaveFunction& w) {
  return FluidState(momentum_density(w), density(w));
}

FluidTangent pushforward(const WaveFunction& w, const ComplexField& phi) {
  require_same_grid(w.grid(), phi.grid, "pushforward");
  ComplexVectorField cross = conj(w.psi) * gradient(phi) + conj(phi) * gradient(w.psi);
  VectorField dmu = imag_part(cross);
  ScalarField drho = 2.0 * real_part(conj(w.psi) * phi);
  return FluidTangent(std::move(dmu), std::move(drho));
}

PsiFunctional pullback_functional(const FluidFunctional& F) {
  return {F.name + " o madelung",
          [F](const WaveFunction& w) { return F.evaluate(madelung(w)); },
          [F](const WaveFunction& w) {
            FluidState s = madelung(w);
            VectorField du = F.d_mu(s);
            ScalarField dr = F.d_rho(s);
            ComplexVectorField psi_du(w.grid());
            std::size_t nsz = w.grid().size();
            for (int c = 0; c < w.grid().dim; ++c)
              for (std::size_t i = 0; i < nsz; ++i)
                psi_du.at(c, i) = w.psi.v[i] * du.at(c, i);
            ComplexField out = 2.0 * (dr * w.psi) -
                               Complex(0.0, 1.0) * divergence(psi_du) -
                               Complex(0.0, 1.0) * dot(gradient(w.psi), du);
            return out;
          }};
}

IntertwineResidual intertwine_check(const WaveFunction& w, const NonlinearityModel& m) {
  FluidTangent lhs = pushforward(w, nls_rhs(w, m));
  FluidTangent rhs = qhd_rhs(madelung(w), m);

  auto pair_sup = [](const FluidTangent& t) {
    return std::max(sup_norm(t.mu), sup_norm(t.rho));
  };
  auto pair_l2 = [](const FluidTangent& t) {
    double a = l2_norm(t.mu), b = l2_norm(t.rho);
    return std::sqrt(a * a + b * b);
  };

  // exact zeros (e.g. steady states) must report residual zero, so the
  // denominator never collapses below a floor
  constexpr double kFloor = 1e-13;
  IntertwineResidual r;
  r.scale = std::max(pair_sup(lhs), pair_sup(rhs));
  FluidTangent diff = lhs - rhs;
  double denom_sup = std::max(r.scale, kFloor);
  double denom_l2 = std::max(std::max(pair_l2(lhs), pair_l2(rhs)), kFloor);
  r.rel_sup = pair_sup(diff) / denom_sup;
  r.rel_l2 = pair_l2(diff) / denom_l2;
  return r;
}

std::vector<int> winding_numbers(const WaveFunction& w) {
  require_finite(w.psi, "winding_numbers");
  if (min_density(w) < kRhoMin)
    throw std::domain_error("winding_numbers: wave function is near-vacuum");

  const GridSpec& g = w.grid();
  ScalarField rho = density(w);
  VectorField phase_grad = (1.0 / rho) * momentum_density(w);

  std::vector<int> out(g.dim);
  for (int a = 0; a < g.dim; ++a) {
    // circulation along axis a, averaged over the transverse direction(s)
    double circulation =
        integrate(component(phase_grad, a)) * g.length[a] / g.volume();
    double wn = circulation / (2.0 * M_PI);
    double rounded = std::round(wn);
    if (std::abs(wn - rounded) > kWindingTol)
      throw std::domain_error("winding_numbers: circulation is not near an integer");
    out[a] = static_cast<int>(rounded);
  }
  return out;
}

}  // namespace madlab
