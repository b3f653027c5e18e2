#include "rsm/nls.hpp"

#include <cmath>
#include <stdexcept>

#include "rsm/hankel.hpp"
#include "rsm/operators.hpp"

namespace rsm {

NlsParams make_nls_params(double K, int lambda) {
  if (lambda < -1 || lambda > 1)
    throw std::invalid_argument("nls params: lambda must be in {-1, 0, 1}");
  if (!std::isfinite(K)) throw std::invalid_argument("nls params: K must be finite");
  return NlsParams{K, lambda};
}

void validate(const SolverConfig& cfg) {
  if (!(cfg.dt > 0) || !std::isfinite(cfg.dt))
    throw std::invalid_argument("solver config: dt must be positive");
  if (cfg.t_final < 0) throw std::invalid_argument("solver config: t_final must be >= 0");
  if (cfg.t_final > 0 && cfg.dt > cfg.t_final * (1 + 1e-12))
    throw std::invalid_argument("solver config: dt must not exceed t_final");
  if (cfg.output_every < 1) throw std::invalid_argument("solver config: output_every must be >= 1");
  if (!(cfg.linear_solve_tol > 0))
    throw std::invalid_argument("solver config: linear_solve_tol must be positive");
}

namespace {

// Pointwise potential V[q] = K I(|q|^2) - (lambda/2) |q|^2.
std::vector<double> potential(const ComplexRadialField& q, const NlsParams& p) {
  const RealRadialField Iq = nonlocal_I(abs2(q));
  std::vector<double> V(static_cast<size_t>(q.size()));
  for (int i = 0; i < q.size(); ++i)
    V[static_cast<size_t>(i)] = p.K * Iq[i] - 0.5 * p.lambda * std::norm(q[i]);
  return V;
}

// Crank-Nicolson for the linear part i q_t = H q with
// H = -(Delta - 1/r^2), tridiagonal in flux form.  The solve is a direct
// Thomas elimination with a residual check against linear_solve_tol.
class CrankNicolson {
 public:
  CrankNicolson(GridPtr grid, double dt, double tol)
      : grid_(std::move(grid)), dt_(dt), tol_(tol) {
    const int n = grid_->n;
    const double h = grid_->h;
    hlo_.resize(static_cast<size_t>(n));
    hdiag_.resize(static_cast<size_t>(n));
    hup_.resize(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
      const double r = grid_->node(i);
      const double rm = r - h / 2, rp = r + h / 2;
      hlo_[static_cast<size_t>(i)] = -rm / (r * h * h);
      hup_[static_cast<size_t>(i)] = -rp / (r * h * h);
      hdiag_[static_cast<size_t>(i)] = (rm + rp) / (r * h * h) + 1.0 / (r * r);
    }
    b_.resize(static_cast<size_t>(n));
    rhs_.resize(static_cast<size_t>(n));
  }

  void apply_H(const std::vector<Complex>& q, std::vector<Complex>& out) const {
    const int n = grid_->n;
    for (int i = 0; i < n; ++i) {
      Complex s = hdiag_[static_cast<size_t>(i)] * q[static_cast<size_t>(i)];
      if (i > 0) s += hlo_[static_cast<size_t>(i)] * q[static_cast<size_t>(i) - 1];
      if (i < n - 1) s += hup_[static_cast<size_t>(i)] * q[static_cast<size_t>(i) + 1];
      out[static_cast<size_t>(i)] = s;
    }
  }

  // q <- (I + i dt/2 H)^{-1} (I - i dt/2 H) q
  void step(std::vector<Complex>& q, long step_index) {
    const int n = grid_->n;
    const Complex mu(0, dt_ / 2);
    apply_H(q, rhs_);
    for (int i = 0; i < n; ++i)
      rhs_[static_cast<size_t>(i)] = q[static_cast<size_t>(i)] - mu * rhs_[static_cast<size_t>(i)];
    solve(rhs_, q, step_index);
  }

 private:
  // Thomas elimination for (I + i dt/2 H) x = b.
  void solve(const std::vector<Complex>& bvec, std::vector<Complex>& x, long step_index) {
    const int n = grid_->n;
    const Complex mu(0, dt_ / 2);
    std::vector<Complex>& diag = b_;
    for (int i = 0; i < n; ++i) {
      diag[static_cast<size_t>(i)] = 1.0 + mu * hdiag_[static_cast<size_t>(i)];
      x[static_cast<size_t>(i)] = bvec[static_cast<size_t>(i)];
    }
    for (int i = 1; i < n; ++i) {
      const Complex low = mu * hlo_[static_cast<size_t>(i)];
      const Complex piv = diag[static_cast<size_t>(i) - 1];
      if (std::abs(piv) < 1e-300)
        throw SolverAbort("linear solve failure: vanishing pivot (misconfigured grid?)",
                          step_index);
      const Complex w = low / piv;
      diag[static_cast<size_t>(i)] -= w * mu * hup_[static_cast<size_t>(i) - 1];
      x[static_cast<size_t>(i)] -= w * x[static_cast<size_t>(i) - 1];
    }
    if (std::abs(diag[static_cast<size_t>(n) - 1]) < 1e-300)
      throw SolverAbort("linear solve failure: vanishing pivot (misconfigured grid?)", step_index);
    x[static_cast<size_t>(n) - 1] /= diag[static_cast<size_t>(n) - 1];
    for (int i = n - 2; i >= 0; --i)
      x[static_cast<size_t>(i)] =
          (x[static_cast<size_t>(i)] - mu * hup_[static_cast<size_t>(i)] * x[static_cast<size_t>(i) + 1]) /
          diag[static_cast<size_t>(i)];

    // residual check: ||(I + mu H) x - b|| / ||b||
    double rnum = 0, rden = 0;
    std::vector<Complex> Hx(static_cast<size_t>(n));
    apply_H(x, Hx);
    for (int i = 0; i < n; ++i) {
      const Complex res =
          x[static_cast<size_t>(i)] + mu * Hx[static_cast<size_t>(i)] - bvec[static_cast<size_t>(i)];
      rnum += std::norm(res);
      rden += std::norm(bvec[static_cast<size_t>(i)]);
    }
    if (rden > 0 && std::sqrt(rnum / rden) > tol_)
      throw SolverAbort("linear solve failure: residual above tolerance (ill-conditioned system)",
                        step_index);
  }

  GridPtr grid_;
  double dt_, tol_;
  std::vector<double> hlo_, hdiag_, hup_;
  std::vector<Complex> b_, rhs_;
};

void half_phase(ComplexRadialField& q, const NlsParams& p, double dt) {
  const auto V = potential(q, p);
  for (int i = 0; i < q.size(); ++i)
    q[i] *= std::exp(Complex(0, -0.5 * dt * V[static_cast<size_t>(i)]));
}

}  // namespace

ComplexRadialField nls_rhs(const ComplexRadialField& q, const NlsParams& p) {
  ComplexRadialField lap = laplacian_m1(q);
  const auto V = potential(q, p);
  ComplexRadialField out(q.grid);
  const Complex iu(0, 1);
  for (int i = 0; i < q.size(); ++i)
    out[i] = -iu * (-lap[i] + V[static_cast<size_t>(i)] * q[i]);
  return out;
}

NlsState step_strang(const NlsState& s, const NlsParams& p, double dt, double linear_solve_tol) {
  NlsState out{s.t + dt, s.q};
  half_phase(out.q, p, dt);
  CrankNicolson cn(out.q.grid, dt, linear_solve_tol);
  cn.step(out.q.v, 0);
  half_phase(out.q, p, dt);
  return out;
}

NlsTrajectory evolve(const ComplexRadialField& q0, const NlsParams& p, const SolverConfig& cfg,
                     const EvolveOptions& opts) {
  validate(cfg);
  if (!all_finite(q0)) throw std::invalid_argument("evolve: non-finite initial data");

  NlsTrajectory traj;
  traj.local_virial_R = (opts.local_virial_R > 0) ? opts.local_virial_R : q0.grid->r_max / 2;

  const double mass0 = mass(q0);
  const long total_steps = std::lround(cfg.t_final / cfg.dt);

  NlsState state{0.0, q0};
  std::vector<double> out_t{0.0};
  std::vector<double> out_l4{l4_norm_4(q0)};
  double l4_accum = 0;
  traj.states.push_back(state);
  traj.rows.push_back(nls_diagnostics_row(0.0, q0, p, traj.local_virial_R, l4_accum));

  CrankNicolson cn(q0.grid, cfg.dt, cfg.linear_solve_tol);
  for (long step = 1; step <= total_steps; ++step) {
    half_phase(state.q, p, cfg.dt);
    cn.step(state.q.v, step);
    half_phase(state.q, p, cfg.dt);
    state.t = step * cfg.dt;

    if (!all_finite(state.q)) throw SolverAbort("non-finite samples", step);
    if (mass0 > 0) {
      const double drift = std::abs(mass(state.q) - mass0) / mass0;
      if (drift > 1e-3)
        throw SolverAbort("instability: relative mass drift " + std::to_string(drift), step);
    }

    if (step % cfg.output_every == 0 || step == total_steps) {
      out_t.push_back(state.t);
      out_l4.push_back(l4_norm_4(state.q));
      l4_accum += 0.5 * (out_t.back() - out_t[out_t.size() - 2]) *
                  (out_l4.back() + out_l4[out_l4.size() - 2]);
      traj.states.push_back(state);
      traj.rows.push_back(nls_diagnostics_row(state.t, state.q, p, traj.local_virial_R, l4_accum));
    }
  }
  return traj;
}

ComplexRadialField free_evolution_exact(const ComplexRadialField& q0, double t, double band_limit) {
  Hankel1 transform(q0.grid, band_limit);
  return transform.free_evolution(q0, t);
}

}  // namespace rsm
