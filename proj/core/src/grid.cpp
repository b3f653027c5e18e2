#include "rsm/grid.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rsm {

GridPtr make_grid(int n, double r_max) {
  if (n < 8) throw std::invalid_argument("make_grid: need n >= 8, got " + std::to_string(n));
  if (!(r_max > 0) || !std::isfinite(r_max))
    throw std::invalid_argument("make_grid: need r_max > 0");

  auto g = std::make_shared<RadialGrid>();
  g->n = n;
  g->h = r_max / n;
  g->r_max = g->h * n;  // n * h = r_max exactly, by construction
  g->nodes.resize(static_cast<size_t>(n));
  g->weights.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const double r = (i + 0.5) * g->h;
    g->nodes[static_cast<size_t>(i)] = r;
    g->weights[static_cast<size_t>(i)] = 2.0 * std::numbers::pi * r * g->h;
  }
  return g;
}

bool same_grid(const RadialGrid& a, const RadialGrid& b) {
  return &a == &b || (a.n == b.n && a.r_max == b.r_max);
}

}  // namespace rsm
