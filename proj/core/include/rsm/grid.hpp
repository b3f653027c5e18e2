#pragma once

#include <memory>
#include <vector>

namespace rsm {

/// Cell-centered uniform radial mesh on (0, r_max].
///
/// Nodes sit at r_i = (i + 1/2) h, i = 0..n-1, h = r_max / n, so no node
/// touches the coordinate singularity at r = 0.  Quadrature weights
/// w_i = 2*pi*r_i*h realize integrals of radial functions over the plane,
/// i.e. integrate(f) approximates the integral of f over R^2 for radial f.
/// The midpoint rule with these weights integrates piecewise-linear-in-r
/// integrands r*f exactly, so disk areas come out exact up to rounding.
struct RadialGrid {
  int n = 0;          // cell count
  double r_max = 0;   // outer radius, equals n*h by construction
  double h = 0;       // cell width
  std::vector<double> nodes;    // r_i
  std::vector<double> weights;  // 2*pi*r_i*h

  double node(int i) const { return nodes[static_cast<size_t>(i)]; }
  double weight(int i) const { return weights[static_cast<size_t>(i)]; }
};

using GridPtr = std::shared_ptr<const RadialGrid>;

/// Build a grid with n >= 8 cells on (0, r_max].  Throws std::invalid_argument
/// for a degenerate mesh (n < 8 or r_max <= 0, or non-finite r_max).
GridPtr make_grid(int n, double r_max);

/// True when two fields may be combined sample-by-sample: same object or
/// identical (n, r_max).
bool same_grid(const RadialGrid& a, const RadialGrid& b);

}  // namespace rsm
