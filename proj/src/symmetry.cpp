#include "madlab/symmetry.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace madlab {

namespace {

// interpolants for the displacement components of a group element
struct DisplacementInterpolant {
  const GridSpec grid;
  std::vector<ComplexInterpolant> comp;

  explicit DisplacementInterpolant(const VectorField& f) : grid(f.grid) {
    for (int a = 0; a < grid.dim; ++a) comp.emplace_back(component(f, a));
  }

  // f(x) for a batch of points
  std::vector<Point> at(std::span<const Point> pts) const {
    std::vector<Point> out(pts.size(), Point{0.0, 0.0});
    for (int a = 0; a < grid.dim; ++a) {
      auto vals = comp[a].at(pts);
      for (std::size_t i = 0; i < pts.size(); ++i) out[i][a] = vals[i].real();
    }
    return out;
  }
};

// Jacobian Df of the displacement, all dim^2 entries as interpolants
struct JacobianInterpolant {
  const GridSpec grid;
  std::vector<ComplexInterpolant> entries;  // row-major [i][j] = d_j f_i

  explicit JacobianInterpolant(const VectorField& f) : grid(f.grid) {
    for (int i = 0; i < grid.dim; ++i)
      for (int j = 0; j < grid.dim; ++j)
        entries.emplace_back(derivative(component(f, i), j));
  }

  // det(I + Df) at a batch of points
  std::vector<double> det_at(std::span<const Point> pts) const {
    std::vector<double> out(pts.size());
    if (grid.dim == 1) {
      auto d = entries[0].at(pts);
      for (std::size_t i = 0; i < pts.size(); ++i) out[i] = 1.0 + d[i].real();
    } else {
      auto d00 = entries[0].at(pts);
      auto d01 = entries[1].at(pts);
      auto d10 = entries[2].at(pts);
      auto d11 = entries[3].at(pts);
      for (std::size_t i = 0; i < pts.size(); ++i)
        out[i] = (1.0 + d00[i].real()) * (1.0 + d11[i].real()) -
                 d01[i].real() * d10[i].real();
    }
    return out;
  }
};

double point_distance(const Point& a, const Point& b, int dim) {
  double m = 0.0;
  for (int c = 0; c < dim; ++c) m = std::max(m, std::abs(a[c] - b[c]));
  return m;
}

// Solve x + f(x) = y per node.  Plain fixed point x -> y - f(x) first
// (a contraction whenever ||Df|| < 1), Newton on the stragglers.
std::vector<Point> invert_displacement(const DisplacementInterpolant& finterp,
                                       const VectorField& f,
                                       std::span<const Point> targets) {
  const GridSpec& g = f.grid;
  std::vector<Point> x(targets.begin(), targets.end());
  std::vector<char> done(targets.size(), 0);

  constexpr int kFixedPointIters = 80;
  std::size_t remaining = targets.size();
  for (int iter = 0; iter < kFixedPointIters && remaining > 0; ++iter) {
    auto fx = finterp.at(x);
    remaining = 0;
    for (std::size_t p = 0; p < x.size(); ++p) {
      if (done[p]) continue;
      Point next;
      double residual = 0.0;
      for (int c = 0; c < g.dim; ++c) {
        next[c] = targets[p][c] - fx[p][c];
        residual = std::max(residual, std::abs(x[p][c] + fx[p][c] - targets[p][c]));
      }
      x[p] = next;
      if (residual <= kInversionTol)
        done[p] = 1;
      else
        ++remaining;
    }
  }
  if (remaining == 0) return x;

  // Newton fallback: x -= (I + Df(x))^{-1} (x + f(x) - y)
  std::unique_ptr<JacobianInterpolant> jac =
      std::make_unique<JacobianInterpolant>(f);
  constexpr int kNewtonIters = 30;
  for (int iter = 0; iter < kNewtonIters && remaining > 0; ++iter) {
    auto fx = finterp.at(x);
    remaining = 0;
    for (std::size_t p = 0; p < x.size(); ++p) {
      if (done[p]) continue;
      Point res;
      double rnorm = 0.0;
      for (int c = 0; c < g.dim; ++c) {
        res[c] = x[p][c] + fx[p][c] - targets[p][c];
        rnorm = std::max(rnorm, std::abs(res[c]));
      }
      if (rnorm <= kInversionTol) {
        done[p] = 1;
        continue;
      }
      if (g.dim == 1) {
        double j = 1.0 + jac->entries[0].at(x[p]).real();
        if (j == 0.0) throw std::runtime_error("group_act: singular Jacobian");
        x[p][0] -= res[0] / j;
      } else {
        double j00 = 1.0 + jac->entries[0].at(x[p]).real();
        double j01 = jac->entries[1].at(x[p]).real();
        double j10 = jac->entries[2].at(x[p]).real();
        double j11 = 1.0 + jac->entries[3].at(x[p]).real();
        double det = j00 * j11 - j01 * j10;
        if (det == 0.0) throw std::runtime_error("group_act: singular Jacobian");
        x[p][0] -= (j11 * res[0] - j01 * res[1]) / det;
        x[p][1] -= (-j10 * res[0] + j00 * res[1]) / det;
      }
      ++remaining;
    }
  }
  if (remaining > 0)
    throw std::runtime_error("group_act: inversion of g = id + f did not converge");
  return x;
}

std::vector<Point> grid_nodes(const GridSpec& g) {
  std::vector<Point> pts(g.size());
  for (std::size_t i = 0; i < pts.size(); ++i) pts[i] = g.node_point(i);
  return pts;
}

}  // namespace

ScalarField group_element_jacobian(const GroupElement& e) {
  const GridSpec& g = e.grid();
  ScalarField det(g, 1.0);
  if (g.dim == 1) {
    ScalarField d = derivative(component(e.displacement, 0), 0);
    for (std::size_t i = 0; i < det.v.size(); ++i) det.v[i] = 1.0 + d.v[i];
  } else {
    ScalarField d00 = derivative(component(e.displacement, 0), 0);
    ScalarField d01 = derivative(component(e.displacement, 0), 1);
    ScalarField d10 = derivative(component(e.displacement, 1), 0);
    ScalarField d11 = derivative(component(e.displacement, 1), 1);
    for (std::size_t i = 0; i < det.v.size(); ++i)
      det.v[i] = (1.0 + d00.v[i]) * (1.0 + d11.v[i]) - d01.v[i] * d10.v[i];
  }
  return det;
}

void validate_group_element(const GroupElement& e) {
  ScalarField det = group_element_jacobian(e);
  for (double d : det.v)
    if (!(d > 0.0))
      throw std::domain_error("group element: det(Dg) must be positive everywhere");
}

std::vector<Point> invert_diffeomorphism(const GroupElement& e) {
  DisplacementInterpolant finterp(e.displacement);
  auto nodes = grid_nodes(e.grid());
  return invert_displacement(finterp, e.displacement, nodes);
}

WaveFunction group_act(const GroupElement& e, const WaveFunction& w) {
  require_same_grid(e.grid(), w.grid(), "group_act");
  validate_group_element(e);
  const GridSpec& g = w.grid();

  DisplacementInterpolant finterp(e.displacement);
  auto nodes = grid_nodes(g);
  auto xinv = invert_displacement(finterp, e.displacement, nodes);

  // det Dg^{-1}(y) = 1 / det Dg(g^{-1}(y))
  JacobianInterpolant jac(e.displacement);
  auto det_at_inv = jac.det_at(xinv);

  ComplexInterpolant psi_interp(w.psi);
  auto psi_at_inv = psi_interp.at(xinv);

  ComplexField out(g);
  for (std::size_t i = 0; i < out.v.size(); ++i) {
    if (!(det_at_inv[i] > 0.0))
      throw std::domain_error("group_act: det(Dg) must be positive everywhere");
    double amp = std::sqrt(1.0 / det_at_inv[i]);
    out.v[i] = amp * std::polar(1.0, -e.phase.v[i]) * psi_at_inv[i];
  }
  return WaveFunction(std::move(out));
}

GroupElement group_compose(const GroupElement& e1, const GroupElement& e2) {
  require_same_grid(e1.grid(), e2.grid(), "group_compose");
  const GridSpec& g = e1.grid();

  // displacement of g1 o g2 at x: f2(x) + f1(x + f2(x))
  auto nodes = grid_nodes(g);
  std::vector<Point> shifted(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (int c = 0; c < g.dim; ++c)
      shifted[i][c] = nodes[i][c] + e2.displacement.at(c, i);
  DisplacementInterpolant f1interp(e1.displacement);
  auto f1_at = f1interp.at(shifted);
  VectorField f12(g);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (int c = 0; c < g.dim; ++c)
      f12.at(c, i) = e2.displacement.at(c, i) + f1_at[i][c];

  // phase: a1 + a2 o g1^{-1}
  auto x1inv = invert_displacement(f1interp, e1.displacement, nodes);
  ComplexInterpolant a2interp(e2.phase);
  auto a2_at = a2interp.at(x1inv);
  ScalarField a12(g);
  for (std::size_t i = 0; i < a12.v.size(); ++i)
    a12.v[i] = e1.phase.v[i] + a2_at[i].real();

  return GroupElement(std::move(f12), std::move(a12));
}

ComplexField algebra_act(const AlgebraElement& xi, const WaveFunction& w) {
  require_same_grid(xi.grid(), w.grid(), "algebra_act");
  ScalarField div_v = divergence(xi.v);
  return -0.5 * (div_v * w.psi) - Complex(0.0, 1.0) * (xi.alpha * w.psi) -
         dot(gradient(w.psi), xi.v);
}

AlgebraElement lie_bracket(const AlgebraElement& xi, const AlgebraElement& eta) {
  require_same_grid(xi.grid(), eta.grid(), "lie_bracket");
  const GridSpec& g = xi.grid();
  const VectorField& u = xi.v;
  const VectorField& v = eta.v;

  // vector part (v.grad)u - (u.grad)v
  VectorField vec(g);
  for (int j = 0; j < g.dim; ++j) {
    ScalarField acc(g);
    for (int i = 0; i < g.dim; ++i) {
      ScalarField a = component(v, i) * derivative(component(u, j), i);
      ScalarField b = component(u, i) * derivative(component(v, j), i);
      for (std::size_t p = 0; p < acc.v.size(); ++p) acc.v[p] += a.v[p] - b.v[p];
    }
    std::copy(acc.v.begin(), acc.v.end(), vec.v.begin() + j * g.size());
  }

  ScalarField scal = dot(v, gradient(xi.alpha)) - dot(u, gradient(eta.alpha));
  return AlgebraElement(std::move(vec), std::move(scal));
}

AlgebraElement lie_bracket_flipped(const AlgebraElement& xi, const AlgebraElement& eta) {
  AlgebraElement b = lie_bracket(xi, eta);
  return AlgebraElement(-b.v, b.alpha);
}

double pairing(const FluidState& s, const AlgebraElement& xi) {
  require_same_grid(s.grid(), xi.grid(), "pairing");
  return integrate(s.rho * xi.alpha + dot(s.mu, xi.v));
}

double pairing(const FluidTangent& s, const AlgebraElement& xi) {
  require_same_grid(s.grid(), xi.grid(), "pairing");
  return integrate(s.rho * xi.alpha + dot(s.mu, xi.v));
}

double moment(const AlgebraElement& xi, const WaveFunction& w) {
  require_same_grid(xi.grid(), w.grid(), "moment");
  ComplexField integrand = xi.alpha * (conj(w.psi) * w.psi) -
                           Complex(0.0, 1.0) * dot(conj(w.psi) * gradient(w.psi), xi.v);
  return integrate(integrand).real();
}

ComplexField moment_gradient(const AlgebraElement& xi, const WaveFunction& w) {
  require_same_grid(xi.grid(), w.grid(), "moment_gradient");
  ScalarField div_v = divergence(xi.v);
  return 2.0 * (xi.alpha * w.psi) - Complex(0.0, 2.0) * dot(gradient(w.psi), xi.v) -
         Complex(0.0, 1.0) * (div_v * w.psi);
}

PsiFunctional moment_functional(const AlgebraElement& xi) {
  return {"moment",
          [xi](const WaveFunction& w) { return moment(xi, w); },
          [xi](const WaveFunction& w) { return moment_gradient(xi, w); }};
}

namespace {

double equivariance_residual_impl(const AlgebraElement& xi, const AlgebraElement& eta,
                                  const WaveFunction& w, bool flipped) {
  AlgebraElement bracket = flipped ? lie_bracket_flipped(xi, eta) : lie_bracket(xi, eta);
  double lhs = moment(bracket, w);
  double rhs = pb_psi(moment_functional(xi), moment_functional(eta), w);
  return std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
}

}  // namespace

double equivariance_residual(const AlgebraElement& xi, const AlgebraElement& eta,
                             const WaveFunction& w) {
  return equivariance_residual_impl(xi, eta, w, false);
}

double equivariance_residual_flipped(const AlgebraElement& xi, const AlgebraElement& eta,
                                     const WaveFunction& w) {
  return equivariance_residual_impl(xi, eta, w, true);
}

GroupElement approximate_exponential(const AlgebraElement& xi, double t, int rk4_steps) {
  const GridSpec& g = xi.grid();
  if (rk4_steps < 1) throw std::invalid_argument("approximate_exponential: steps >= 1");

  DisplacementInterpolant vinterp(xi.v);
  auto x = grid_nodes(g);
  auto nodes = x;
  const double h = t / rk4_steps;

  auto eval = [&](const std::vector<Point>& pts) { return vinterp.at(pts); };
  std::vector<Point> stage(x.size());
  for (int s = 0; s < rk4_steps; ++s) {
    auto k1 = eval(x);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (int c = 0; c < g.dim; ++c) stage[i][c] = x[i][c] + 0.5 * h * k1[i][c];
    auto k2 = eval(stage);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (int c = 0; c < g.dim; ++c) stage[i][c] = x[i][c] + 0.5 * h * k2[i][c];
    auto k3 = eval(stage);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (int c = 0; c < g.dim; ++c) stage[i][c] = x[i][c] + h * k3[i][c];
    auto k4 = eval(stage);
    for (std::size_t i = 0; i < x.size(); ++i)
      for (int c = 0; c < g.dim; ++c)
        x[i][c] += h / 6.0 * (k1[i][c] + 2.0 * k2[i][c] + 2.0 * k3[i][c] + k4[i][c]);
  }

  VectorField displacement(g);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (int c = 0; c < g.dim; ++c) displacement.at(c, i) = x[i][c] - nodes[i][c];
  return GroupElement(std::move(displacement), t * xi.alpha);
}

double flow_derivative_residual(const AlgebraElement& xi, const WaveFunction& w,
                                double eps) {
  WaveFunction plus = group_act(approximate_exponential(xi, eps), w);
  WaveFunction minus = group_act(approximate_exponential(xi, -eps), w);
  ComplexField diff = (0.5 / eps) * (plus.psi - minus.psi);
  ComplexField exact = algebra_act(xi, w);
  double denom = std::max(1.0, sup_norm(exact));
  return sup_norm(diff - exact) / denom;
}

}  // namespace madlab
