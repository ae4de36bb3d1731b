#include "madlab/grid.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace madlab {

namespace {

void check_axis(int n, double len) {
  if (n < 8 || n % 2 != 0)
    throw std::invalid_argument("grid: points per axis must be even and >= 8, got " +
                                std::to_string(n));
  if (!(len > 0.0) || !std::isfinite(len))
    throw std::invalid_argument("grid: axis length must be positive and finite");
}

}  // namespace

GridSpec::GridSpec(int n0, double len0) : dim(1), n{n0, 1}, length{len0, 0.0} {
  check_axis(n0, len0);
}

GridSpec::GridSpec(int n0, int n1, double len0, double len1)
    : dim(2), n{n0, n1}, length{len0, len1} {
  check_axis(n0, len0);
  check_axis(n1, len1);
}

double GridSpec::cell_volume() const {
  double h = spacing(0);
  if (dim == 2) h *= spacing(1);
  return h;
}

double GridSpec::volume() const {
  return dim == 2 ? length[0] * length[1] : length[0];
}

Point GridSpec::node_point(std::size_t flat) const {
  if (dim == 1) return {coord(0, flat), 0.0};
  return {coord(0, flat), coord(1, flat)};
}

std::size_t GridSpec::flat_index(int i0, int i1) const {
  return dim == 2 ? static_cast<std::size_t>(i0) * n[1] + i1
                  : static_cast<std::size_t>(i0);
}

int mode_number(const GridSpec& g, int axis, int i) {
  return i < g.n[axis] / 2 ? i : i - g.n[axis];
}

double wavenumber(const GridSpec& g, int axis, int i) {
  return 2.0 * M_PI * mode_number(g, axis, i) / g.length[axis];
}

ScalarField::ScalarField(const GridSpec& g, double fill) : grid(g), v(g.size(), fill) {}

ScalarField::ScalarField(const GridSpec& g, std::vector<double> values)
    : grid(g), v(std::move(values)) {
  if (v.size() != grid.size())
    throw std::invalid_argument("ScalarField: sample count does not match grid");
}

ComplexField::ComplexField(const GridSpec& g, Complex fill) : grid(g), v(g.size(), fill) {}

ComplexField::ComplexField(const GridSpec& g, std::vector<Complex> values)
    : grid(g), v(std::move(values)) {
  if (v.size() != grid.size())
    throw std::invalid_argument("ComplexField: sample count does not match grid");
}

VectorField::VectorField(const GridSpec& g, double fill)
    : grid(g), v(g.size() * g.dim, fill) {}

VectorField::VectorField(const GridSpec& g, std::vector<double> values)
    : grid(g), v(std::move(values)) {
  if (v.size() != grid.size() * grid.dim)
    throw std::invalid_argument("VectorField: sample count does not match grid");
}

ComplexVectorField::ComplexVectorField(const GridSpec& g, Complex fill)
    : grid(g), v(g.size() * g.dim, fill) {}

bool all_finite(const ScalarField& f) {
  return std::all_of(f.v.begin(), f.v.end(), [](double x) { return std::isfinite(x); });
}

bool all_finite(const ComplexField& f) {
  return std::all_of(f.v.begin(), f.v.end(), [](const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
  });
}

bool all_finite(const VectorField& f) {
  return std::all_of(f.v.begin(), f.v.end(), [](double x) { return std::isfinite(x); });
}

namespace {
[[noreturn]] void throw_nonfinite(const char* what) {
  throw std::invalid_argument(std::string(what) + ": non-finite sample");
}
}  // namespace

void require_finite(const ScalarField& f, const char* what) {
  if (!all_finite(f)) throw_nonfinite(what);
}
void require_finite(const ComplexField& f, const char* what) {
  if (!all_finite(f)) throw_nonfinite(what);
}
void require_finite(const VectorField& f, const char* what) {
  if (!all_finite(f)) throw_nonfinite(what);
}

void require_same_grid(const GridSpec& a, const GridSpec& b, const char* what) {
  if (!(a == b))
    throw std::invalid_argument(std::string(what) + ": fields live on different grids");
}

// ---- FFT plumbing --------------------------------------------------------
//
// Plans are cached per (n0, n1, direction).  FFTW_UNALIGNED lets a cached
// plan run on any caller buffer via the new-array interface; planning is
// serialized (the FFTW planner is not thread-safe), execution is not.

namespace {

std::mutex g_plan_mutex;

fftw_plan lookup_plan(int n0, int n1, int sign) {
  static std::map<std::tuple<int, int, int>, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(g_plan_mutex);
  auto key = std::make_tuple(n0, n1, sign);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  std::size_t total = static_cast<std::size_t>(n0) * (n1 > 0 ? n1 : 1);
  fftw_complex* scratch_in = fftw_alloc_complex(total);
  fftw_complex* scratch_out = fftw_alloc_complex(total);
  fftw_plan plan = n1 > 0
      ? fftw_plan_dft_2d(n0, n1, scratch_in, scratch_out, sign,
                         FFTW_ESTIMATE | FFTW_UNALIGNED)
      : fftw_plan_dft_1d(n0, scratch_in, scratch_out, sign,
                         FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(scratch_in);
  fftw_free(scratch_out);
  if (!plan) throw std::runtime_error("grid: FFTW planner failed");
  cache.emplace(key, plan);
  return plan;
}

void run_dft(const GridSpec& g, const Complex* in, Complex* out, int sign) {
  fftw_plan plan = lookup_plan(g.n[0], g.dim == 2 ? g.n[1] : 0, sign);
  // std::complex<double> is layout-compatible with fftw_complex
  fftw_execute_dft(plan,
                   reinterpret_cast<fftw_complex*>(const_cast<Complex*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

std::vector<Complex> forward_coefficients(const GridSpec& g, const Complex* in) {
  std::vector<Complex> c(g.size());
  run_dft(g, in, c.data(), FFTW_FORWARD);
  double scale = 1.0 / static_cast<double>(g.size());
  for (auto& z : c) z *= scale;
  return c;
}

ComplexField inverse_from_coefficients(const GridSpec& g, const std::vector<Complex>& c) {
  ComplexField out(g);
  run_dft(g, c.data(), out.v.data(), FFTW_BACKWARD);
  return out;
}

// multiply coefficients by (i k_axis), zeroing the Nyquist plane of that axis
void apply_first_derivative(const GridSpec& g, std::vector<Complex>& c, int axis) {
  const int n0 = g.n[0];
  const int n1 = g.dim == 2 ? g.n[1] : 1;
  for (int i0 = 0; i0 < n0; ++i0) {
    for (int i1 = 0; i1 < n1; ++i1) {
      std::size_t idx = static_cast<std::size_t>(i0) * n1 + i1;
      int i = axis == 0 ? i0 : i1;
      if (i == g.n[axis] / 2) {
        c[idx] = 0.0;
        continue;
      }
      c[idx] *= Complex(0.0, wavenumber(g, axis, i));
    }
  }
}

// multiply coefficients by -|k|^2 (Nyquist modes participate)
void apply_laplacian_symbol(const GridSpec& g, std::vector<Complex>& c) {
  const int n0 = g.n[0];
  const int n1 = g.dim == 2 ? g.n[1] : 1;
  for (int i0 = 0; i0 < n0; ++i0) {
    double k0 = wavenumber(g, 0, i0);
    for (int i1 = 0; i1 < n1; ++i1) {
      double k1 = g.dim == 2 ? wavenumber(g, 1, i1) : 0.0;
      c[static_cast<std::size_t>(i0) * n1 + i1] *= -(k0 * k0 + k1 * k1);
    }
  }
}

ComplexField complex_copy(const ScalarField& f) {
  ComplexField out(f.grid);
  for (std::size_t i = 0; i < f.v.size(); ++i) out.v[i] = f.v[i];
  return out;
}

}  // namespace

// ---- derivatives ----------------------------------------------------------

ComplexField derivative(const ComplexField& f, int axis) {
  require_finite(f, "derivative");
  if (axis < 0 || axis >= f.grid.dim)
    throw std::invalid_argument("derivative: axis out of range");
  auto c = forward_coefficients(f.grid, f.v.data());
  apply_first_derivative(f.grid, c, axis);
  return inverse_from_coefficients(f.grid, c);
}

ScalarField derivative(const ScalarField& f, int axis) {
  ComplexField d = derivative(complex_copy(f), axis);
  return real_part(d);
}

VectorField gradient(const ScalarField& f) {
  VectorField out(f.grid);
  for (int a = 0; a < f.grid.dim; ++a) {
    ScalarField d = derivative(f, a);
    std::copy(d.v.begin(), d.v.end(), out.v.begin() + a * f.grid.size());
  }
  return out;
}

ComplexVectorField gradient(const ComplexField& f) {
  ComplexVectorField out(f.grid);
  for (int a = 0; a < f.grid.dim; ++a) {
    ComplexField d = derivative(f, a);
    std::copy(d.v.begin(), d.v.end(), out.v.begin() + a * f.grid.size());
  }
  return out;
}

ScalarField divergence(const VectorField& f) {
  require_finite(f, "divergence");
  ScalarField out(f.grid);
  for (int a = 0; a < f.grid.dim; ++a) {
    ScalarField d = derivative(component(f, a), a);
    for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] += d.v[i];
  }
  return out;
}

ComplexField divergence(const ComplexVectorField& f) {
  ComplexField out(f.grid);
  for (int a = 0; a < f.grid.dim; ++a) {
    ComplexField d = derivative(component(f, a), a);
    for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] += d.v[i];
  }
  return out;
}

ComplexField laplacian(const ComplexField& f) {
  require_finite(f, "laplacian");
  auto c = forward_coefficients(f.grid, f.v.data());
  apply_laplacian_symbol(f.grid, c);
  return inverse_from_coefficients(f.grid, c);
}

ScalarField laplacian(const ScalarField& f) {
  return real_part(laplacian(complex_copy(f)));
}

VectorField laplacian(const VectorField& f) {
  VectorField out(f.grid);
  for (int a = 0; a < f.grid.dim; ++a) {
    ScalarField d = laplacian(component(f, a));
    std::copy(d.v.begin(), d.v.end(), out.v.begin() + a * f.grid.size());
  }
  return out;
}

// ---- quadrature ------------------------------------------------------------

double integrate(const ScalarField& f) {
  require_finite(f, "integrate");
  double s = std::accumulate(f.v.begin(), f.v.end(), 0.0);
  return s * f.grid.cell_volume();
}

Complex integrate(const ComplexField& f) {
  require_finite(f, "integrate");
  Complex s = std::accumulate(f.v.begin(), f.v.end(), Complex(0.0));
  return s * f.grid.cell_volume();
}

double mean(const ScalarField& f) { return integrate(f) / f.grid.volume(); }

double l2_norm(const ScalarField& f) {
  double s = 0.0;
  for (double x : f.v) s += x * x;
  return std::sqrt(s * f.grid.cell_volume());
}

double l2_norm(const ComplexField& f) {
  double s = 0.0;
  for (const Complex& z : f.v) s += std::norm(z);
  return std::sqrt(s * f.grid.cell_volume());
}

double l2_norm(const VectorField& f) {
  double s = 0.0;
  for (double x : f.v) s += x * x;
  return std::sqrt(s * f.grid.cell_volume());
}

double sup_norm(const ScalarField& f) {
  double m = 0.0;
  for (double x : f.v) m = std::max(m, std::abs(x));
  return m;
}

double sup_norm(const ComplexField& f) {
  double m = 0.0;
  for (const Complex& z : f.v) m = std::max(m, std::abs(z));
  return m;
}

double sup_norm(const VectorField& f) {
  double m = 0.0;
  for (double x : f.v) m = std::max(m, std::abs(x));
  return m;
}

double inner(const ComplexField& a, const ComplexField& b) {
  require_same_grid(a.grid, b.grid, "inner");
  double s = 0.0;
  for (std::size_t i = 0; i < a.v.size(); ++i)
    s += a.v[i].real() * b.v[i].real() + a.v[i].imag() * b.v[i].imag();
  return s * a.grid.cell_volume();
}

Complex inner_complex(const ComplexField& a, const ComplexField& b) {
  require_same_grid(a.grid, b.grid, "inner_complex");
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.v.size(); ++i) s += std::conj(a.v[i]) * b.v[i];
  return s * a.grid.cell_volume();
}

// ---- coefficients and interpolation ----------------------------------------

std::vector<Complex> fourier_coefficients(const ComplexField& f) {
  require_finite(f, "fourier_coefficients");
  return forward_coefficients(f.grid, f.v.data());
}

std::vector<Complex> fourier_coefficients(const ScalarField& f) {
  require_finite(f, "fourier_coefficients");
  ComplexField c = complex_copy(f);
  return forward_coefficients(c.grid, c.v.data());
}

ComplexField field_from_coefficients(const GridSpec& g, std::span<const Complex> coeffs) {
  if (coeffs.size() != g.size())
    throw std::invalid_argument("field_from_coefficients: coefficient count mismatch");
  std::vector<Complex> c(coeffs.begin(), coeffs.end());
  return inverse_from_coefficients(g, c);
}

namespace {

double reduce_period(double x, double L) {
  double y = x - L * std::floor(x / L);
  return (y == L) ? 0.0 : y;
}

// evaluate sum_k c_k exp(i k.x) at each point
std::vector<Complex> evaluate_interpolant(const GridSpec& g, const std::vector<Complex>& c,
                                          std::span<const Point> pts) {
  const int n0 = g.n[0];
  const int n1 = g.dim == 2 ? g.n[1] : 1;
  std::vector<Complex> out(pts.size());
  std::vector<Complex> ph0(n0), ph1(n1);
  for (std::size_t p = 0; p < pts.size(); ++p) {
    double x0 = reduce_period(pts[p][0], g.length[0]);
    for (int i = 0; i < n0; ++i)
      ph0[i] = std::polar(1.0, wavenumber(g, 0, i) * x0);
    if (g.dim == 2) {
      double x1 = reduce_period(pts[p][1], g.length[1]);
      for (int i = 0; i < n1; ++i)
        ph1[i] = std::polar(1.0, wavenumber(g, 1, i) * x1);
    } else {
      ph1[0] = 1.0;
    }
    Complex acc = 0.0;
    for (int i0 = 0; i0 < n0; ++i0) {
      Complex row = 0.0;
      const Complex* base = c.data() + static_cast<std::size_t>(i0) * n1;
      for (int i1 = 0; i1 < n1; ++i1) row += base[i1] * ph1[i1];
      acc += row * ph0[i0];
    }
    out[p] = acc;
  }
  return out;
}

}  // namespace

std::vector<Complex> interpolate(const ComplexField& f, std::span<const Point> pts) {
  require_finite(f, "interpolate");
  auto c = forward_coefficients(f.grid, f.v.data());
  return evaluate_interpolant(f.grid, c, pts);
}

std::vector<double> interpolate(const ScalarField& f, std::span<const Point> pts) {
  require_finite(f, "interpolate");
  ComplexField cf = complex_copy(f);
  auto c = forward_coefficients(cf.grid, cf.v.data());
  auto vals = evaluate_interpolant(f.grid, c, pts);
  std::vector<double> out(vals.size());
  for (std::size_t i = 0; i < vals.size(); ++i) out[i] = vals[i].real();
  return out;
}

std::vector<Point> interpolate(const VectorField& f, std::span<const Point> pts) {
  std::vector<Point> out(pts.size(), Point{0.0, 0.0});
  for (int a = 0; a < f.grid.dim; ++a) {
    auto vals = interpolate(component(f, a), pts);
    for (std::size_t i = 0; i < vals.size(); ++i) out[i][a] = vals[i];
  }
  return out;
}

double spectral_tail_ratio(const ComplexField& f) {
  auto c = fourier_coefficients(f);
  const int n0 = f.grid.n[0];
  const int n1 = f.grid.dim == 2 ? f.grid.n[1] : 1;
  double all = 0.0, tail = 0.0;
  for (int i0 = 0; i0 < n0; ++i0) {
    for (int i1 = 0; i1 < n1; ++i1) {
      double mag = std::abs(c[static_cast<std::size_t>(i0) * n1 + i1]);
      all = std::max(all, mag);
      bool outer = std::abs(mode_number(f.grid, 0, i0)) >= n0 / 4;
      if (f.grid.dim == 2)
        outer = outer || std::abs(mode_number(f.grid, 1, i1)) >= n1 / 4;
      if (outer) tail = std::max(tail, mag);
    }
  }
  return all > 0.0 ? tail / all : 0.0;
}

double spectral_tail_ratio(const ScalarField& f) {
  return spectral_tail_ratio(complex_copy(f));
}

ComplexInterpolant::ComplexInterpolant(const ComplexField& f)
    : grid_(f.grid), coeffs_(fourier_coefficients(f)) {}

ComplexInterpolant::ComplexInterpolant(const ScalarField& f)
    : grid_(f.grid), coeffs_(fourier_coefficients(f)) {}

std::vector<Complex> ComplexInterpolant::at(std::span<const Point> pts) const {
  return evaluate_interpolant(grid_, coeffs_, pts);
}

Complex ComplexInterpolant::at(const Point& p) const {
  return evaluate_interpolant(grid_, coeffs_, std::span<const Point>(&p, 1))[0];
}

// ---- arithmetic -------------------------------------------------------------

namespace {
template <class F, class Op>
F zip(const F& a, const F& b, Op op, const char* what) {
  require_same_grid(a.grid, b.grid, what);
  F out = a;
  for (std::size_t i = 0; i < a.v.size(); ++i) out.v[i] = op(a.v[i], b.v[i]);
  return out;
}
}  // namespace

ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  return zip(a, b, std::plus<>(), "operator+");
}
ScalarField operator-(const ScalarField& a, const ScalarField& b) {
  return zip(a, b, std::minus<>(), "operator-");
}
ScalarField operator*(const ScalarField& a, const ScalarField& b) {
  return zip(a, b, std::multiplies<>(), "operator*");
}
ScalarField operator/(const ScalarField& a, const ScalarField& b) {
  return zip(a, b, std::divides<>(), "operator/");
}
ScalarField operator*(double c, const ScalarField& a) {
  ScalarField out = a;
  for (auto& x : out.v) x *= c;
  return out;
}
ScalarField operator/(double c, const ScalarField& a) {
  ScalarField out = a;
  for (auto& x : out.v) x = c / x;
  return out;
}
ScalarField operator+(const ScalarField& a, double c) {
  ScalarField out = a;
  for (auto& x : out.v) x += c;
  return out;
}
ScalarField operator-(const ScalarField& a) { return -1.0 * a; }

ComplexField operator+(const ComplexField& a, const ComplexField& b) {
  return zip(a, b, std::plus<>(), "operator+");
}
ComplexField operator-(const ComplexField& a, const ComplexField& b) {
  return zip(a, b, std::minus<>(), "operator-");
}
ComplexField operator*(const ComplexField& a, const ComplexField& b) {
  return zip(a, b, std::multiplies<>(), "operator*");
}
ComplexField operator*(Complex c, const ComplexField& a) {
  ComplexField out = a;
  for (auto& z : out.v) z *= c;
  return out;
}
ComplexField operator*(double c, const ComplexField& a) {
  return Complex(c, 0.0) * a;
}
ComplexField operator*(const ScalarField& a, const ComplexField& b) {
  require_same_grid(a.grid, b.grid, "operator*");
  ComplexField out = b;
  for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] *= a.v[i];
  return out;
}
ComplexField operator-(const ComplexField& a) { return -1.0 * a; }

VectorField operator+(const VectorField& a, const VectorField& b) {
  return zip(a, b, std::plus<>(), "operator+");
}
VectorField operator-(const VectorField& a, const VectorField& b) {
  return zip(a, b, std::minus<>(), "operator-");
}
VectorField operator*(double c, const VectorField& a) {
  VectorField out = a;
  for (auto& x : out.v) x *= c;
  return out;
}
VectorField operator*(const ScalarField& a, const VectorField& b) {
  require_same_grid(a.grid, b.grid, "operator*");
  VectorField out = b;
  std::size_t nsz = a.grid.size();
  for (int comp = 0; comp < a.grid.dim; ++comp)
    for (std::size_t i = 0; i < nsz; ++i) out.v[comp * nsz + i] *= a.v[i];
  return out;
}
VectorField operator-(const VectorField& a) { return -1.0 * a; }

ComplexField conj(const ComplexField& a) {
  ComplexField out = a;
  for (auto& z : out.v) z = std::conj(z);
  return out;
}

ScalarField real_part(const ComplexField& a) {
  ScalarField out(a.grid);
  for (std::size_t i = 0; i < a.v.size(); ++i) out.v[i] = a.v[i].real();
  return out;
}

ScalarField imag_part(const ComplexField& a) {
  ScalarField out(a.grid);
  for (std::size_t i = 0; i < a.v.size(); ++i) out.v[i] = a.v[i].imag();
  return out;
}

ScalarField abs2(const ComplexField& a) {
  ScalarField out(a.grid);
  for (std::size_t i = 0; i < a.v.size(); ++i) out.v[i] = std::norm(a.v[i]);
  return out;
}

ComplexField to_complex(const ScalarField& a) { return complex_copy(a); }

ScalarField dot(const VectorField& a, const VectorField& b) {
  require_same_grid(a.grid, b.grid, "dot");
  ScalarField out(a.grid);
  std::size_t nsz = a.grid.size();
  for (int comp = 0; comp < a.grid.dim; ++comp)
    for (std::size_t i = 0; i < nsz; ++i)
      out.v[i] += a.v[comp * nsz + i] * b.v[comp * nsz + i];
  return out;
}

ScalarField component(const VectorField& a, int comp) {
  if (comp < 0 || comp >= a.grid.dim)
    throw std::invalid_argument("component: index out of range");
  std::size_t nsz = a.grid.size();
  ScalarField out(a.grid);
  std::copy(a.v.begin() + comp * nsz, a.v.begin() + (comp + 1) * nsz, out.v.begin());
  return out;
}

VectorField from_components(const ScalarField& c0) {
  if (c0.grid.dim != 1)
    throw std::invalid_argument("from_components: expected a 1D grid");
  VectorField out(c0.grid);
  std::copy(c0.v.begin(), c0.v.end(), out.v.begin());
  return out;
}

VectorField from_components(const ScalarField& c0, const ScalarField& c1) {
  require_same_grid(c0.grid, c1.grid, "from_components");
  if (c0.grid.dim != 2)
    throw std::invalid_argument("from_components: expected a 2D grid");
  VectorField out(c0.grid);
  std::size_t nsz = c0.grid.size();
  std::copy(c0.v.begin(), c0.v.end(), out.v.begin());
  std::copy(c1.v.begin(), c1.v.end(), out.v.begin() + nsz);
  return out;
}

VectorField real_part(const ComplexVectorField& a) {
  VectorField out(a.grid);
  for (std::size_t i = 0; i < a.v.size(); ++i) out.v[i] = a.v[i].real();
  return out;
}

VectorField imag_part(const ComplexVectorField& a) {
  VectorField out(a.grid);
  for (std::size_t i = 0; i < a.v.size(); ++i) out.v[i] = a.v[i].imag();
  return out;
}

ComplexVectorField operator+(const ComplexVectorField& a, const ComplexVectorField& b) {
  require_same_grid(a.grid, b.grid, "operator+");
  ComplexVectorField out = a;
  for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] += b.v[i];
  return out;
}

ComplexVectorField operator-(const ComplexVectorField& a, const ComplexVectorField& b) {
  require_same_grid(a.grid, b.grid, "operator-");
  ComplexVectorField out = a;
  for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] -= b.v[i];
  return out;
}

ComplexVectorField operator*(const ComplexField& a, const ComplexVectorField& b) {
  require_same_grid(a.grid, b.grid, "operator*");
  ComplexVectorField out = b;
  std::size_t nsz = a.grid.size();
  for (int comp = 0; comp < a.grid.dim; ++comp)
    for (std::size_t i = 0; i < nsz; ++i) out.v[comp * nsz + i] *= a.v[i];
  return out;
}

ComplexVectorField operator*(const ScalarField& a, const ComplexVectorField& b) {
  require_same_grid(a.grid, b.grid, "operator*");
  ComplexVectorField out = b;
  std::size_t nsz = a.grid.size();
  for (int comp = 0; comp < a.grid.dim; ++comp)
    for (std::size_t i = 0; i < nsz; ++i) out.v[comp * nsz + i] *= a.v[i];
  return out;
}

ComplexField dot(const ComplexVectorField& b, const VectorField& w) {
  require_same_grid(b.grid, w.grid, "dot");
  ComplexField out(b.grid);
  std::size_t nsz = b.grid.size();
  for (int comp = 0; comp < b.grid.dim; ++comp)
    for (std::size_t i = 0; i < nsz; ++i)
      out.v[i] += b.v[comp * nsz + i] * w.v[comp * nsz + i];
  return out;
}

ComplexField component(const ComplexVectorField& a, int comp) {
  if (comp < 0 || comp >= a.grid.dim)
    throw std::invalid_argument("component: index out of range");
  std::size_t nsz = a.grid.size();
  ComplexField out(a.grid);
  std::copy(a.v.begin() + comp * nsz, a.v.begin() + (comp + 1) * nsz, out.v.begin());
  return out;
}

}  // namespace madlab
