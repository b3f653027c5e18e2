#include "rsm/profiles.hpp"

#include <cmath>
#include <numbers>

#include "rsm/weights.hpp"

namespace rsm {

std::uint64_t CorpusRng::next() {
  // splitmix64; stable across platforms and standard libraries
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double CorpusRng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double CorpusRng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

ComplexRadialField gauss_m1(const GridPtr& grid, double amplitude) {
  return gauss_m1_sigma(grid, amplitude, 1.0);
}

ComplexRadialField gauss_m1_sigma(const GridPtr& grid, double amplitude, double sigma) {
  ComplexRadialField q(grid);
  for (int i = 0; i < grid->n; ++i) {
    const double r = grid->node(i);
    q[i] = amplitude * r * std::exp(-r * r / (sigma * sigma));
  }
  return q;
}

std::vector<double> meridian_profile(const GridPtr& grid, double amplitude) {
  std::vector<double> g(static_cast<size_t>(grid->n));
  for (int i = 0; i < grid->n; ++i) {
    const double r = grid->node(i);
    g[static_cast<size_t>(i)] = amplitude * std::exp(-r * r);
  }
  return g;
}

namespace {

// C^3 window: 1 on [0, r_max/2], 0 at r_max.
double window(double r, double r_max) { return cutoff_chi(2 * r / r_max).chi; }

struct Bump {
  double a, c, s;
};

std::vector<Bump> random_bumps(const GridPtr& grid, CorpusRng& rng, bool nonneg) {
  std::vector<Bump> bumps(3);
  const double span = grid->r_max / 2;
  for (auto& b : bumps) {
    b.a = nonneg ? rng.uniform(0.2, 1.0) : rng.uniform(-1.0, 1.0);
    b.c = rng.uniform(0.1 * span, 0.8 * span);
    b.s = rng.uniform(0.3, 0.25 * span);
  }
  return bumps;
}

double eval_bumps(const std::vector<Bump>& bumps, double r) {
  double v = 0;
  for (const auto& b : bumps) v += b.a * std::exp(-(r - b.c) * (r - b.c) / (b.s * b.s));
  return v;
}

}  // namespace

RealRadialField random_smooth_real(const GridPtr& grid, CorpusRng& rng) {
  const auto bumps = random_bumps(grid, rng, false);
  RealRadialField f(grid);
  for (int i = 0; i < grid->n; ++i) {
    const double r = grid->node(i);
    f[i] = eval_bumps(bumps, r) * window(r, grid->r_max);
  }
  return f;
}

RealRadialField random_smooth_nonneg(const GridPtr& grid, CorpusRng& rng) {
  const auto bumps = random_bumps(grid, rng, true);
  RealRadialField f(grid);
  for (int i = 0; i < grid->n; ++i) {
    const double r = grid->node(i);
    f[i] = eval_bumps(bumps, r) * window(r, grid->r_max);
  }
  return f;
}

ComplexRadialField random_smooth_m1(const GridPtr& grid, CorpusRng& rng, double amplitude) {
  const auto re = random_bumps(grid, rng, false);
  const auto im = random_bumps(grid, rng, false);
  ComplexRadialField q(grid);
  for (int i = 0; i < grid->n; ++i) {
    const double r = grid->node(i);
    const double w = window(r, grid->r_max) * amplitude * r * std::exp(-r * r / 8);
    q[i] = w * Complex(eval_bumps(re, r), eval_bumps(im, r));
  }
  return q;
}

SphereMapField random_smooth_map(const GridPtr& grid, CorpusRng& rng, double amplitude) {
  const auto theta_bumps = random_bumps(grid, rng, false);
  const double phi0 = rng.uniform(0, 2 * std::numbers::pi);
  const double phi1 = rng.uniform(-0.5, 0.5);
  SphereMapField u(grid);
  for (int i = 0; i < grid->n; ++i) {
    const double r = grid->node(i);
    const double theta = amplitude * eval_bumps(theta_bumps, r) * window(r, grid->r_max);
    const double phi = phi0 + phi1 * r;
    u[i] = Vec3{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
  }
  return u;
}

}  // namespace rsm
