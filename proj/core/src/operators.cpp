#include "rsm/operators.hpp"

#include <cmath>

namespace rsm {

namespace {

// Flux-form radial Laplacian stencil.  Face radii are r_i -+ h/2; the inner
// face of the first cell sits exactly at r = 0, so the ghost parity across
// the origin never enters the stencil on this mesh.  OuterGhost selects
// Dirichlet zero (m = 1) or a copy of the boundary value (m = 0, zero flux).
enum class OuterGhost { Dirichlet, Neumann };

template <typename T>
std::vector<T> flux_laplacian(const RadialGrid& g, const std::vector<T>& f, OuterGhost outer) {
  const int n = g.n;
  const double h = g.h;
  std::vector<T> out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double r = g.node(i);
    const double rm = r - h / 2;
    const double rp = r + h / 2;
    T acc{};
    if (i > 0) acc += (rm / (r * h * h)) * (f[i - 1] - f[i]);
    if (i < n - 1)
      acc += (rp / (r * h * h)) * (f[i + 1] - f[i]);
    else if (outer == OuterGhost::Dirichlet)
      acc += (rp / (r * h * h)) * (T{} - f[i]);
    // Neumann: ghost equals f[i], outer flux zero.
    out[static_cast<size_t>(i)] = acc;
  }
  return out;
}

template <typename T>
std::vector<T> deriv1(const RadialGrid& g, const std::vector<T>& f) {
  const int n = g.n;
  const double h = g.h;
  std::vector<T> d(static_cast<size_t>(n));
  for (int i = 1; i < n - 1; ++i) d[i] = (1.0 / (2 * h)) * (f[i + 1] - f[i - 1]);
  d[0] = (1.0 / (2 * h)) * (-3.0 * f[0] + 4.0 * f[1] - f[2]);
  d[n - 1] = (1.0 / (2 * h)) * (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]);
  return d;
}

template <typename T>
std::vector<T> deriv2(const RadialGrid& g, const std::vector<T>& f) {
  const int n = g.n;
  const double h2 = g.h * g.h;
  std::vector<T> d(static_cast<size_t>(n));
  for (int i = 1; i < n - 1; ++i) d[i] = (1.0 / h2) * (f[i + 1] - 2.0 * f[i] + f[i - 1]);
  d[0] = (1.0 / h2) * (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]);
  d[n - 1] = (1.0 / h2) * (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]);
  return d;
}

template <typename T>
std::vector<T> deriv3(const RadialGrid& g, const std::vector<T>& f) {
  const int n = g.n;
  const double h3 = g.h * g.h * g.h;
  std::vector<T> d(static_cast<size_t>(n));
  for (int i = 2; i < n - 2; ++i)
    d[i] = (1.0 / (2 * h3)) * (f[i + 2] - 2.0 * f[i + 1] + 2.0 * f[i - 1] - f[i - 2]);
  // first-order one-sided stencils at the two cells on each end
  for (int i : {0, 1}) d[i] = (1.0 / h3) * (-f[i] + 3.0 * f[i + 1] - 3.0 * f[i + 2] + f[i + 3]);
  for (int i : {n - 2, n - 1})
    d[i] = (1.0 / h3) * (f[i] - 3.0 * f[i - 1] + 3.0 * f[i - 2] - f[i - 3]);
  return d;
}

}  // namespace

RealRadialField nonlocal_I(const RealRadialField& f) {
  const RadialGrid& g = *f.grid;
  const int n = g.n;
  RealRadialField out(f.grid);
  // Walk from the outermost cell inward.  tail accumulates the full-cell
  // contributions sum_{j>i} f_j ln((j+1)/j) over 0-based cells [jh, (j+1)h];
  // each node then adds its own partial cell from r_i to the upper edge.
  double tail = 0;
  for (int i = n - 1; i >= 0; --i) {
    out[i] = f[i] * std::log((i + 1.0) / (i + 0.5)) + tail;
    if (i > 0) tail += f[i] * std::log((i + 1.0) / i);
  }
  return out;
}

ComplexRadialField laplacian_m1(const ComplexRadialField& q) {
  ComplexRadialField out(q.grid);
  out.v = flux_laplacian(*q.grid, q.v, OuterGhost::Dirichlet);
  for (int i = 0; i < q.size(); ++i) {
    const double r = q.grid->node(i);
    out[i] -= q[i] / (r * r);
  }
  return out;
}

RealRadialField laplacian_m0(const RealRadialField& f) {
  RealRadialField out(f.grid);
  out.v = flux_laplacian(*f.grid, f.v, OuterGhost::Neumann);
  return out;
}

SphereMapField laplacian_m0(const SphereMapField& f) {
  SphereMapField out(f.grid);
  out.v = flux_laplacian(*f.grid, f.v, OuterGhost::Neumann);
  return out;
}

std::vector<double> radial_derivative(const RadialGrid& g, const std::vector<double>& f) {
  return deriv1(g, f);
}
std::vector<Complex> radial_derivative(const RadialGrid& g, const std::vector<Complex>& f) {
  return deriv1(g, f);
}
std::vector<Vec3> radial_derivative(const RadialGrid& g, const std::vector<Vec3>& f) {
  return deriv1(g, f);
}

ComplexRadialField radial_derivative(const ComplexRadialField& q) {
  ComplexRadialField out(q.grid);
  out.v = deriv1(*q.grid, q.v);
  return out;
}

std::vector<Complex> radial_derivative2(const RadialGrid& g, const std::vector<Complex>& f) {
  return deriv2(g, f);
}
std::vector<Vec3> radial_derivative2(const RadialGrid& g, const std::vector<Vec3>& f) {
  return deriv2(g, f);
}
std::vector<Complex> radial_derivative3(const RadialGrid& g, const std::vector<Complex>& f) {
  return deriv3(g, f);
}
std::vector<Vec3> radial_derivative3(const RadialGrid& g, const std::vector<Vec3>& f) {
  return deriv3(g, f);
}

}  // namespace rsm
