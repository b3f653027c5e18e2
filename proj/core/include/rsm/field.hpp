#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "rsm/grid.hpp"

namespace rsm {

using Complex = std::complex<double>;

/// Small fixed 3-vector for maps into S^2 and their tangent fields.
struct Vec3 {
  double x = 0, y = 0, z = 0;

  Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
  Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
  Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }
};

inline Vec3 operator+(Vec3 a, const Vec3& b) { return a += b; }
inline Vec3 operator-(Vec3 a, const Vec3& b) { return a -= b; }
inline Vec3 operator-(const Vec3& a) { return {-a.x, -a.y, -a.z}; }
inline Vec3 operator*(double s, Vec3 a) { return a *= s; }
inline Vec3 operator*(Vec3 a, double s) { return a *= s; }

inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
inline Vec3 normalized(const Vec3& a) { double m = norm(a); return {a.x / m, a.y / m, a.z / m}; }

inline constexpr Vec3 khat{0, 0, 1};
inline constexpr Vec3 ihat{1, 0, 0};
inline constexpr Vec3 jhat{0, 1, 0};

/// Complex radial profile q(r) sampled at the grid nodes; implicitly extended
/// by zero beyond r_max.  In the first angular-momentum sector this is the
/// profile of w(x) = e^{i theta} q(r).
struct ComplexRadialField {
  GridPtr grid;
  std::vector<Complex> v;

  ComplexRadialField() = default;
  explicit ComplexRadialField(GridPtr g) : grid(std::move(g)), v(static_cast<size_t>(grid->n)) {}
  int size() const { return grid ? grid->n : 0; }
  Complex& operator[](int i) { return v[static_cast<size_t>(i)]; }
  const Complex& operator[](int i) const { return v[static_cast<size_t>(i)]; }
};

/// Real radial samples (densities, weights, |q|^2, ...).
struct RealRadialField {
  GridPtr grid;
  std::vector<double> v;

  RealRadialField() = default;
  explicit RealRadialField(GridPtr g) : grid(std::move(g)), v(static_cast<size_t>(grid->n)) {}
  int size() const { return grid ? grid->n : 0; }
  double& operator[](int i) { return v[static_cast<size_t>(i)]; }
  const double& operator[](int i) const { return v[static_cast<size_t>(i)]; }
};

/// Samples of a radial map u(r) into S^2 with far-field value khat.
struct SphereMapField {
  GridPtr grid;
  std::vector<Vec3> v;

  SphereMapField() = default;
  explicit SphereMapField(GridPtr g) : grid(std::move(g)), v(static_cast<size_t>(grid->n)) {}
  int size() const { return grid ? grid->n : 0; }
  Vec3& operator[](int i) { return v[static_cast<size_t>(i)]; }
  const Vec3& operator[](int i) const { return v[static_cast<size_t>(i)]; }
};

/// Quadrature sum  sum_i w_i f_i; the weights carry the 2*pi factor, so this
/// is the integral over R^2 of the radial extension of f.
double integrate(const RealRadialField& f);

// L^2 and L^p norms with the same plane-measure weights.
double l2_norm_sq(const ComplexRadialField& q);
double l2_norm(const ComplexRadialField& q);
double l4_norm_4(const ComplexRadialField& q);  // integral of |q|^4
double lp_norm(const RealRadialField& f, double p);

/// Weighted inner product  sum_i w_i conj(a_i) b_i.
Complex inner(const ComplexRadialField& a, const ComplexRadialField& b);

/// sup_i |a_i - b_i|.
double sup_diff(const ComplexRadialField& a, const ComplexRadialField& b);

RealRadialField abs2(const ComplexRadialField& q);
RealRadialField abs_field(const ComplexRadialField& q);

bool all_finite(const ComplexRadialField& q);
bool all_finite(const SphereMapField& u);

}  // namespace rsm
