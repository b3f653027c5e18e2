#pragma once

#include <cstdint>
#include <vector>

#include "rsm/field.hpp"

namespace rsm {

/// Deterministic generator for randomized test corpora.  Uniform doubles are
/// produced from raw mt19937_64 output, so streams are identical across
/// standard libraries for a given seed.
class CorpusRng {
 public:
  explicit CorpusRng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}

  double uniform();                       // [0, 1)
  double uniform(double lo, double hi);

 private:
  std::uint64_t next();
  std::uint64_t state_;
};

/// a * r * exp(-r^2): the standard first-sector Gaussian profile.
ComplexRadialField gauss_m1(const GridPtr& grid, double amplitude);

/// a * r * exp(-r^2 / sigma^2): wider variant with spectrum concentrated
/// below ~ 4 / sigma.
ComplexRadialField gauss_m1_sigma(const GridPtr& grid, double amplitude, double sigma);

/// Meridian angle profile g(r) = a * exp(-r^2) sampled on the grid.
std::vector<double> meridian_profile(const GridPtr& grid, double amplitude);

/// Smooth compactly supported real bump mixture: sum of a few Gaussians times
/// a C^3 window vanishing for r >= r_max (and equal to 1 on [0, r_max/2]).
RealRadialField random_smooth_real(const GridPtr& grid, CorpusRng& rng);

/// As above with positive amplitudes only.
RealRadialField random_smooth_nonneg(const GridPtr& grid, CorpusRng& rng);

/// Random compactly supported first-sector profile: r times a complex bump
/// mixture times the window (vanishes linearly at r = 0).
ComplexRadialField random_smooth_m1(const GridPtr& grid, CorpusRng& rng, double amplitude = 0.3);

/// Random smooth sphere map close to khat: spherical angles
/// theta(r) = amplitude * bump mixture (windowed), phi(r) smooth; |u| = 1
/// exactly and u -> khat at r_max.
SphereMapField random_smooth_map(const GridPtr& grid, CorpusRng& rng, double amplitude = 0.4);

}  // namespace rsm
