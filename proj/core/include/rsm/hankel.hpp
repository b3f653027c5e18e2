#pragma once

#include "rsm/field.hpp"

namespace rsm {

/// Discrete Hankel transform of order 1 by direct quadrature.
///
/// Forward:  qh(k_j) = sum_i (w_i / 2 pi) q(r_i) J1(k_j r_i)
///                   = sum_i h r_i q(r_i) J1(k_j r_i),
/// inverse:  q(r_i)  = sum_j dk k_j qh(k_j) J1(k_j r_i),
/// with k_j = (j + 1/2) dk, dk = k_max / m.  The pair diagonalizes the
/// m = 1 radial Laplacian: eigenfunction J1(k r) has symbol k^2, which is
/// what makes this an exact reference for the free flow.
///
/// inverse(forward(q)) acts as the identity on fields whose spectrum lives
/// inside [0, k_max]; content above the band is projected out.  The default
/// band is half the mesh Nyquist frequency pi/h, past which the node
/// quadrature cannot resolve the kernel oscillation anyway.  Cost is O(n*m)
/// per application with an O(n*m) precomputed kernel table; this transform
/// is a reference tool, not a hot path.
class Hankel1 {
 public:
  /// k_max <= 0 selects the default band pi / (2 h); m <= 0 selects m = n.
  explicit Hankel1(GridPtr grid, double k_max = 0, int m = 0);

  std::vector<Complex> forward(const ComplexRadialField& q) const;
  ComplexRadialField inverse(const std::vector<Complex>& qh) const;

  /// inverse . multiply by exp(-i k^2 t) . forward: the free Schrödinger
  /// flow in the first angular-momentum sector.
  ComplexRadialField free_evolution(const ComplexRadialField& q0, double t) const;

  const std::vector<double>& frequencies() const { return k_; }
  double k_max() const { return k_max_; }
  const RadialGrid& grid() const { return *grid_; }

 private:
  GridPtr grid_;
  int m_;
  double k_max_, dk_;
  std::vector<double> k_;
  std::vector<double> kernel_;  // kernel_[j*n + i] = J1(k_j r_i)
};

/// Transform pair on the grid (the two directions share one kernel table).
inline Hankel1 hankel1_pair(GridPtr grid, double k_max = 0, int m = 0) {
  return Hankel1(std::move(grid), k_max, m);
}

}  // namespace rsm
