#pragma once
// Periodic grids and spectral calculus on the flat torus (1D and 2D).
//
// Fields are nodal samples in axis-major order: node (i0, i1) of an
// n0 x n1 grid sits at flat index i0 * n1 + i1, axis a spans [0, L_a)
// with uniform spacing L_a / n_a.  Derivatives act in Fourier space with
// wavenumbers k in {-N/2, ..., N/2 - 1} * (2*pi/L); the Nyquist mode is
// zeroed for odd derivative orders so that real fields stay real.
// Quadrature is the rectangle rule (exact for resolved trigonometric
// polynomials), interpolation is evaluation of the trigonometric
// interpolant.

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace madlab {

using Complex = std::complex<double>;
using Point = std::array<double, 2>;  // coordinates; [1] ignored in 1D

struct GridSpec {
  int dim = 1;
  std::array<int, 2> n = {8, 1};
  std::array<double, 2> length = {1.0, 0.0};

  GridSpec() = default;
  GridSpec(int n0, double len0);
  GridSpec(int n0, int n1, double len0, double len1);

  std::size_t size() const {
    return static_cast<std::size_t>(n[0]) * (dim == 2 ? n[1] : 1);
  }
  double spacing(int axis) const { return length[axis] / n[axis]; }
  // volume of one quadrature cell, h0 (* h1)
  double cell_volume() const;
  double volume() const;
  // coordinate along `axis` of the node with the given flat index
  double coord(int axis, std::size_t flat) const {
    if (dim == 1) return spacing(0) * static_cast<double>(flat);
    std::size_t i = (axis == 0) ? flat / n[1] : flat % n[1];
    return spacing(axis) * static_cast<double>(i);
  }
  Point node_point(std::size_t flat) const;
  std::size_t flat_index(int i0, int i1 = 0) const;

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

// Signed integer mode number for storage index i on the given axis
// (0, 1, ..., n/2-1, -n/2, ..., -1), and the wavenumber 2*pi*mode/L.
int mode_number(const GridSpec& g, int axis, int i);
double wavenumber(const GridSpec& g, int axis, int i);

struct ScalarField {
  GridSpec grid;
  std::vector<double> v;

  ScalarField() = default;
  explicit ScalarField(const GridSpec& g, double fill = 0.0);
  ScalarField(const GridSpec& g, std::vector<double> values);
};

struct ComplexField {
  GridSpec grid;
  std::vector<Complex> v;

  ComplexField() = default;
  explicit ComplexField(const GridSpec& g, Complex fill = {});
  ComplexField(const GridSpec& g, std::vector<Complex> values);
};

// Vector fields store one block of size() samples per component:
// component c occupies v[c*size .. (c+1)*size).
struct VectorField {
  GridSpec grid;
  std::vector<double> v;

  VectorField() = default;
  explicit VectorField(const GridSpec& g, double fill = 0.0);
  VectorField(const GridSpec& g, std::vector<double> values);

  double& at(int comp, std::size_t i) { return v[comp * grid.size() + i]; }
  double at(int comp, std::size_t i) const { return v[comp * grid.size() + i]; }
};

struct ComplexVectorField {
  GridSpec grid;
  std::vector<Complex> v;

  ComplexVectorField() = default;
  explicit ComplexVectorField(const GridSpec& g, Complex fill = {});

  Complex& at(int comp, std::size_t i) { return v[comp * grid.size() + i]; }
  Complex at(int comp, std::size_t i) const { return v[comp * grid.size() + i]; }
};

// ---- validation helpers ------------------------------------------------

bool all_finite(const ScalarField& f);
bool all_finite(const ComplexField& f);
bool all_finite(const VectorField& f);
// throws std::invalid_argument naming `what` if a sample is NaN/Inf
void require_finite(const ScalarField& f, const char* what);
void require_finite(const ComplexField& f, const char* what);
void require_finite(const VectorField& f, const char* what);
void require_same_grid(const GridSpec& a, const GridSpec& b, const char* what);

// ---- spectral calculus -------------------------------------------------

ScalarField derivative(const ScalarField& f, int axis);
ComplexField derivative(const ComplexField& f, int axis);
VectorField gradient(const ScalarField& f);
ComplexVectorField gradient(const ComplexField& f);
ScalarField divergence(const VectorField& f);
ComplexField divergence(const ComplexVectorField& f);
ScalarField laplacian(const ScalarField& f);
ComplexField laplacian(const ComplexField& f);
VectorField laplacian(const VectorField& f);

// ---- quadrature and norms ----------------------------------------------

double integrate(const ScalarField& f);
Complex integrate(const ComplexField& f);
double mean(const ScalarField& f);
double l2_norm(const ScalarField& f);
double l2_norm(const ComplexField& f);
double l2_norm(const VectorField& f);
double sup_norm(const ScalarField& f);
double sup_norm(const ComplexField& f);
double sup_norm(const VectorField& f);
// real L2 inner product Re int conj(a) b dx and its complex version
double inner(const ComplexField& a, const ComplexField& b);
Complex inner_complex(const ComplexField& a, const ComplexField& b);

// ---- Fourier coefficients and interpolation ------------------------------

// Normalized coefficients c_k with f(x) = sum_k c_k exp(i k.x), stored in
// the same axis-major layout indexed by mode_number().
std::vector<Complex> fourier_coefficients(const ComplexField& f);
std::vector<Complex> fourier_coefficients(const ScalarField& f);
ComplexField field_from_coefficients(const GridSpec& g, std::span<const Complex> coeffs);

// Trigonometric interpolation at arbitrary points (coordinates are reduced
// modulo the period).  Real fields use the symmetric (cosine) treatment of
// the Nyquist mode, i.e. the real part of the complex interpolant.
std::vector<double> interpolate(const ScalarField& f, std::span<const Point> pts);
std::vector<Complex> interpolate(const ComplexField& f, std::span<const Point> pts);
std::vector<Point> interpolate(const VectorField& f, std::span<const Point> pts);

// max |c_k| over modes with |mode| >= n/4 on some axis, relative to the
// overall max |c_k|; a cheap resolution monitor for evolved states.
double spectral_tail_ratio(const ComplexField& f);
double spectral_tail_ratio(const ScalarField& f);

// Reusable interpolant: coefficients are computed once at construction and
// can then be evaluated at many point batches (iterative inversions, flows).
class ComplexInterpolant {
 public:
  explicit ComplexInterpolant(const ComplexField& f);
  explicit ComplexInterpolant(const ScalarField& f);
  std::vector<Complex> at(std::span<const Point> pts) const;
  Complex at(const Point& p) const;

 private:
  GridSpec grid_;
  std::vector<Complex> coeffs_;
};

// ---- nodewise arithmetic -------------------------------------------------

ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator*(const ScalarField& a, const ScalarField& b);
ScalarField operator/(const ScalarField& a, const ScalarField& b);
ScalarField operator*(double c, const ScalarField& a);
ScalarField operator/(double c, const ScalarField& a);
ScalarField operator+(const ScalarField& a, double c);
ScalarField operator-(const ScalarField& a);

ComplexField operator+(const ComplexField& a, const ComplexField& b);
ComplexField operator-(const ComplexField& a, const ComplexField& b);
ComplexField operator*(const ComplexField& a, const ComplexField& b);
ComplexField operator*(Complex c, const ComplexField& a);
ComplexField operator*(double c, const ComplexField& a);
ComplexField operator*(const ScalarField& a, const ComplexField& b);
ComplexField operator-(const ComplexField& a);

VectorField operator+(const VectorField& a, const VectorField& b);
VectorField operator-(const VectorField& a, const VectorField& b);
VectorField operator*(double c, const VectorField& a);
VectorField operator*(const ScalarField& a, const VectorField& b);
VectorField operator-(const VectorField& a);

ComplexField conj(const ComplexField& a);
ScalarField real_part(const ComplexField& a);
ScalarField imag_part(const ComplexField& a);
ScalarField abs2(const ComplexField& a);          // |f|^2
ComplexField to_complex(const ScalarField& a);

ScalarField dot(const VectorField& a, const VectorField& b);
ScalarField component(const VectorField& a, int comp);
VectorField from_components(const ScalarField& c0);
VectorField from_components(const ScalarField& c0, const ScalarField& c1);

VectorField real_part(const ComplexVectorField& a);
VectorField imag_part(const ComplexVectorField& a);
ComplexVectorField operator+(const ComplexVectorField& a, const ComplexVectorField& b);
ComplexVectorField operator-(const ComplexVectorField& a, const ComplexVectorField& b);
ComplexVectorField operator*(const ComplexField& a, const ComplexVectorField& b);
ComplexVectorField operator*(const ScalarField& a, const ComplexVectorField& b);
// sum_a b_a * w_a, complex per node
ComplexField dot(const ComplexVectorField& b, const VectorField& w);
ComplexField component(const ComplexVectorField& a, int comp);

}  // namespace madlab
