#include "rsm/smap.hpp"

#include <cmath>
#include <stdexcept>

#include "rsm/operators.hpp"

namespace rsm {

double smap_dt_bound(const RadialGrid& g) { return g.h * g.h / 4; }

SphereMapField smap_rhs(const SphereMapField& u) {
  SphereMapField lap = laplacian_m0(u);
  SphereMapField out(u.grid);
  for (int i = 0; i < u.size(); ++i) out[i] = cross(u[i], lap[i]);
  out[u.size() - 1] = Vec3{};  // outermost cell pinned to khat
  return out;
}

namespace {

void add_scaled(SphereMapField& acc, const SphereMapField& d, double s) {
  for (int i = 0; i < acc.size(); ++i) acc[i] += s * d[i];
}

SmapState rk4_project(const SmapState& s, double dt) {
  const SphereMapField& u = s.u;
  SphereMapField k1 = smap_rhs(u);
  SphereMapField tmp = u;
  add_scaled(tmp, k1, dt / 2);
  SphereMapField k2 = smap_rhs(tmp);
  tmp = u;
  add_scaled(tmp, k2, dt / 2);
  SphereMapField k3 = smap_rhs(tmp);
  tmp = u;
  add_scaled(tmp, k3, dt);
  SphereMapField k4 = smap_rhs(tmp);

  SmapState out{s.t + dt, u};
  for (int i = 0; i < u.size(); ++i) {
    out.u[i] += (dt / 6) * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
    out.u[i] = normalized(out.u[i]);
  }
  return out;
}

}  // namespace

SmapState step_rk4_project(const SmapState& s, double dt) {
  const double bound = smap_dt_bound(*s.u.grid);
  if (dt > bound * (1 + 1e-12))
    throw std::invalid_argument("step_rk4_project: dt above the stability bound h^2/4");
  SmapState out = rk4_project(s, dt);
  if (!all_finite(out.u)) throw SolverAbort("schrodinger map step produced non-finite samples", 0);
  return out;
}

SmapTrajectory evolve_map(const SphereMapField& u0, const SolverConfig& cfg) {
  validate(cfg);
  const double bound = smap_dt_bound(*u0.grid);
  if (cfg.dt > bound * (1 + 1e-12))
    throw std::invalid_argument("evolve_map: dt above the stability bound h^2/4");

  SmapTrajectory traj;
  const long total_steps = std::lround(cfg.t_final / cfg.dt);

  SmapState state{0.0, u0};
  auto emit = [&traj](const SmapState& s) {
    traj.states.push_back(s);
    DiagnosticsRow row;
    row.t = s.t;
    row.energy_u = energy(s.u);
    row.mass_u = mass_dev(s.u);
    traj.rows.push_back(row);
  };
  emit(state);

  for (long step = 1; step <= total_steps; ++step) {
    state = rk4_project(state, cfg.dt);
    state.t = step * cfg.dt;
    if (!all_finite(state.u))
      throw SolverAbort("schrodinger map step produced non-finite samples", step);
    if (step % cfg.output_every == 0 || step == total_steps) emit(state);
  }
  return traj;
}

SphereMapField meridian_map(const GridPtr& grid, const std::vector<double>& g) {
  if (static_cast<int>(g.size()) != grid->n)
    throw std::invalid_argument("meridian_map: profile length mismatch");
  SphereMapField u(grid);
  for (int i = 0; i < grid->n; ++i) {
    const double gi = g[static_cast<size_t>(i)];
    u[i] = Vec3{std::sin(gi), 0.0, std::cos(gi)};
  }
  return u;
}

double sphere_constraint_violation(const SphereMapField& u) {
  double m = 0;
  for (int i = 0; i < u.size(); ++i) m = std::max(m, std::abs(norm(u[i]) - 1.0));
  return m;
}

}  // namespace rsm
