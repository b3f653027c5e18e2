#pragma once

#include <vector>

#include "rsm/diagnostics.hpp"
#include "rsm/field.hpp"
#include "rsm/nls.hpp"

namespace rsm {

/// State of the radial Schrödinger-map (Landau-Lifshitz) flow u_t = u x Delta u.
struct SmapState {
  double t = 0;
  SphereMapField u;
};

/// Largest admissible explicit time step h^2 / 4 for the grid.
double smap_dt_bound(const RadialGrid& g);

/// Pointwise u x (laplacian_m0 u).  The result is tangent, u . rhs = 0, as an
/// algebraic identity of the cross product.  The outermost cell is pinned to
/// khat (its rhs is zero), matching the far-field boundary condition.
SphereMapField smap_rhs(const SphereMapField& u);

/// Classical RK4 step followed by pointwise renormalization u <- u/|u|, which
/// keeps the sphere constraint exact.  Rejects dt above the stability bound
/// h^2/4; aborts on non-finite samples.
SmapState step_rk4_project(const SmapState& s, double dt);

struct SmapTrajectory {
  std::vector<SmapState> states;
  std::vector<DiagnosticsRow> rows;  // t, energy_u, mass_u populated
};

/// Repeated stepping with energy / mass-deviation diagnostics on the output
/// cadence.
SmapTrajectory evolve_map(const SphereMapField& u0, const SolverConfig& cfg);

/// Meridian family u = (sin g, 0, cos g) for a smooth profile g with
/// g(r_max) ~ 0; the standard analytically tractable test maps.
SphereMapField meridian_map(const GridPtr& grid, const std::vector<double>& g);

/// Maximum deviation of |u_i| from 1.
double sphere_constraint_violation(const SphereMapField& u);

}  // namespace rsm
