#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "rsm/diagnostics.hpp"
#include "rsm/field.hpp"

namespace rsm {

/// Couplings of the nonlocal cubic equation
///   i q_t = -Delta q + q/r^2 + ( K I(|q|^2) - (lambda/2) |q|^2 ) q,
/// I(f)(r) = integral_r^inf f(rho) drho/rho,  lambda in {-1, 0, +1}.
struct NlsParams {
  double K = 0;
  int lambda = 0;

  /// Sign condition 2K >= max(lambda, lambda/2) under which the virial and
  /// Morawetz right-hand sides are nonnegative.
  bool defocusing() const {
    double m = std::max(static_cast<double>(lambda), lambda / 2.0);
    return 2 * K >= m;
  }
};

NlsParams make_nls_params(double K, int lambda);  // validates lambda

struct NlsState {
  double t = 0;
  ComplexRadialField q;
};

struct SolverConfig {
  double dt = 1e-3;
  double t_final = 0;
  int output_every = 1;
  double linear_solve_tol = 1e-12;  // relative residual accepted from the banded solve
};

void validate(const SolverConfig& cfg);

/// Thrown when a run cannot be continued (mass blow-up past the instability
/// threshold, NaN samples, failed linear solve).  Carries the step index.
class SolverAbort : public std::runtime_error {
 public:
  SolverAbort(std::string what, long step) : std::runtime_error(std::move(what)), step_(step) {}
  long step() const { return step_; }

 private:
  long step_;
};

/// Right-hand side dq/dt = -i [ -laplacian_m1(q) + (K I(|q|^2) - (lambda/2)|q|^2) q ].
ComplexRadialField nls_rhs(const ComplexRadialField& q, const NlsParams& p);

/// One Strang step: half-step of the nonlinear phase rotation
/// q <- q exp(-i (dt/2) V[q]), V[q] = K I(|q|^2) - (lambda/2)|q|^2 (exact,
/// since |q| is pointwise invariant under the rotation), then a
/// Crank-Nicolson step of the linear part via a tridiagonal solve, then the
/// second half phase.  Both substeps preserve the discrete L^2 norm, the
/// phase exactly and the linear solve up to its residual tolerance.
/// dt may be negative (time-reversed stepping).
NlsState step_strang(const NlsState& s, const NlsParams& p, double dt,
                     double linear_solve_tol = 1e-12);

struct NlsTrajectory {
  std::vector<NlsState> states;     // every output_every steps, initial included
  std::vector<DiagnosticsRow> rows;
  double local_virial_R = 0;        // radius used for the I_R column
};

struct EvolveOptions {
  double local_virial_R = 0;  // <= 0 selects r_max / 2
};

/// Repeated Strang stepping with diagnostics on the output cadence.  Aborts
/// (throws SolverAbort with the step index) if the relative mass drift
/// exceeds 1e-3, the instability detector for a blown-up discretization.
NlsTrajectory evolve(const ComplexRadialField& q0, const NlsParams& p, const SolverConfig& cfg,
                     const EvolveOptions& opts = {});

/// Exact free flow (K = lambda = 0) through the order-1 Hankel transform:
/// forward, multiply by exp(-i k^2 t), inverse.  band_limit <= 0 selects the
/// transform's default band; pass the data's band for reference-quality
/// results on band-limited fields.
ComplexRadialField free_evolution_exact(const ComplexRadialField& q0, double t,
                                        double band_limit = 0);

inline double l4_spacetime_accumulate(const NlsTrajectory& traj) {
  std::vector<double> t, l4;
  t.reserve(traj.states.size());
  l4.reserve(traj.states.size());
  for (const auto& s : traj.states) {
    t.push_back(s.t);
    l4.push_back(l4_norm_4(s.q));
  }
  return l4_spacetime_accumulate(t, l4);
}

}  // namespace rsm
