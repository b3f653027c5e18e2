#include "rsm/hasimoto.hpp"

#include <cmath>
#include <stdexcept>

#include "rsm/operators.hpp"

namespace rsm {

namespace {

// Interpolants used by the inward transport integrators.  Midpoints between
// nodes i and i+1 get the 4-point cubic where the stencil fits, the 2-point
// average otherwise; node derivatives get the 4th-order centered stencil in
// the interior.  One lower-order stage near the ends does not disturb the
// global order.

template <typename T>
T midpoint_value(const std::vector<T>& f, int i) {
  const int n = static_cast<int>(f.size());
  if (i >= 1 && i + 2 < n)
    return (1.0 / 16.0) * (9.0 * (f[i] + f[i + 1]) - (f[i - 1] + f[i + 2]));
  return 0.5 * (f[i] + f[i + 1]);
}

template <typename T>
T midpoint_slope(const std::vector<T>& f, int i, double h) {
  const int n = static_cast<int>(f.size());
  if (i >= 1 && i + 2 < n)
    return (1.0 / (24.0 * h)) * (27.0 * (f[i + 1] - f[i]) - (f[i + 2] - f[i - 1]));
  return (1.0 / h) * (f[i + 1] - f[i]);
}

template <typename T>
T node_slope(const std::vector<T>& f, int i, double h) {
  const int n = static_cast<int>(f.size());
  if (i >= 2 && i + 2 < n)
    return (1.0 / (12.0 * h)) * (8.0 * (f[i + 1] - f[i - 1]) - (f[i + 2] - f[i - 2]));
  if (i >= 1 && i + 1 < n) return (1.0 / (2.0 * h)) * (f[i + 1] - f[i - 1]);
  if (i == 0) return (1.0 / (2.0 * h)) * (-3.0 * f[0] + 4.0 * f[1] - f[2]);
  return (1.0 / (2.0 * h)) * (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]);
}

Vec3 transport_rhs(const Vec3& e, const Vec3& u, const Vec3& ur) { return -dot(ur, e) * u; }

}  // namespace

FrameField build_frame(const SphereMapField& u) {
  const RadialGrid& g = *u.grid;
  const int n = g.n;
  const double h = g.h;

  const Vec3 u_out = u[n - 1];
  if (norm(u_out - khat) > 0.1)
    throw std::invalid_argument("build_frame: boundary value too far from khat");
  Vec3 seed = ihat - dot(ihat, u_out) * u_out;
  if (norm(seed) < 0.1)
    throw std::invalid_argument("build_frame: degenerate seed, boundary value nearly +-ihat");
  seed = normalized(seed);

  FrameField fr;
  fr.grid = u.grid;
  fr.e.resize(static_cast<size_t>(n));
  fr.f.resize(static_cast<size_t>(n));
  fr.e[static_cast<size_t>(n) - 1] = seed;
  fr.f[static_cast<size_t>(n) - 1] = cross(u_out, seed);

  Vec3 e = seed;
  for (int i = n - 2; i >= 0; --i) {
    // one RK4 step of e' = -(u_r . e) u from node i+1 down to node i
    const Vec3 u_hi = u[i + 1];
    const Vec3 ur_hi = node_slope(u.v, i + 1, h);
    const Vec3 u_mid = normalized(midpoint_value(u.v, i));
    const Vec3 ur_mid = midpoint_slope(u.v, i, h);
    const Vec3 u_lo = u[i];
    const Vec3 ur_lo = node_slope(u.v, i, h);

    const double dr = -h;
    const Vec3 k1 = transport_rhs(e, u_hi, ur_hi);
    const Vec3 k2 = transport_rhs(e + (dr / 2) * k1, u_mid, ur_mid);
    const Vec3 k3 = transport_rhs(e + (dr / 2) * k2, u_mid, ur_mid);
    const Vec3 k4 = transport_rhs(e + dr * k3, u_lo, ur_lo);
    e += (dr / 6) * (k1 + 2 * k2 + 2 * k3 + k4);

    // keep the frame exactly orthonormal to u at the node
    e -= dot(e, u_lo) * u_lo;
    e = normalized(e);
    fr.e[static_cast<size_t>(i)] = e;
    fr.f[static_cast<size_t>(i)] = cross(u_lo, e);
  }
  return fr;
}

ComplexRadialField compute_q(const SphereMapField& u, const FrameField& frame) {
  if (!same_grid(*u.grid, *frame.grid)) throw std::invalid_argument("compute_q: grid mismatch");
  const auto ur = radial_derivative(*u.grid, u.v);
  ComplexRadialField q(u.grid);
  for (int i = 0; i < u.size(); ++i) {
    // tangential part of the discrete derivative; the expansion in the
    // orthonormal pair (e, f) then satisfies |q| = |u_r| identically
    const Vec3 t = ur[static_cast<size_t>(i)] - dot(ur[static_cast<size_t>(i)], u[i]) * u[i];
    q[i] = Complex(dot(t, frame.e[static_cast<size_t>(i)]), dot(t, frame.f[static_cast<size_t>(i)]));
  }
  return q;
}

HasimotoResult hasimoto_transform(const SphereMapField& u) {
  HasimotoResult out;
  out.frame = build_frame(u);
  out.q = compute_q(u, out.frame);
  return out;
}

ReconstructResult reconstruct(const ComplexRadialField& q) {
  const RadialGrid& g = *q.grid;
  const int n = g.n;
  const double h = g.h;
  if (!all_finite(q)) throw std::invalid_argument("reconstruct: non-finite samples");

  ReconstructResult rec;
  rec.u = SphereMapField(q.grid);
  rec.frame.grid = q.grid;
  rec.frame.e.resize(static_cast<size_t>(n));
  rec.frame.f.resize(static_cast<size_t>(n));

  struct Triple {
    Vec3 u, e, f;
  };
  auto rhs = [](const Triple& w, Complex qv) {
    return Triple{qv.real() * w.e + qv.imag() * w.f, -qv.real() * w.u, -qv.imag() * w.u};
  };
  auto axpy = [](const Triple& w, double s, const Triple& d) {
    return Triple{w.u + s * d.u, w.e + s * d.e, w.f + s * d.f};
  };

  Triple w{khat, ihat, jhat};
  rec.u[n - 1] = w.u;
  rec.frame.e[static_cast<size_t>(n) - 1] = w.e;
  rec.frame.f[static_cast<size_t>(n) - 1] = w.f;

  for (int i = n - 2; i >= 0; --i) {
    const Complex q_hi = q[i + 1];
    const Complex q_mid = midpoint_value(q.v, i);
    const Complex q_lo = q[i];
    const double dr = -h;
    const Triple k1 = rhs(w, q_hi);
    const Triple k2 = rhs(axpy(w, dr / 2, k1), q_mid);
    const Triple k3 = rhs(axpy(w, dr / 2, k2), q_mid);
    const Triple k4 = rhs(axpy(w, dr, k3), q_lo);
    w.u += (dr / 6) * (k1.u + 2 * k2.u + 2 * k3.u + k4.u);
    w.e += (dr / 6) * (k1.e + 2 * k2.e + 2 * k3.e + k4.e);
    w.f += (dr / 6) * (k1.f + 2 * k2.f + 2 * k3.f + k4.f);
    rec.u[i] = w.u;
    rec.frame.e[static_cast<size_t>(i)] = w.e;
    rec.frame.f[static_cast<size_t>(i)] = w.f;
  }
  return rec;
}

double gram_deviation(const ReconstructResult& rec) {
  double dev = 0;
  for (int i = 0; i < rec.u.size(); ++i) {
    const Vec3& u = rec.u[i];
    const Vec3& e = rec.frame.e[static_cast<size_t>(i)];
    const Vec3& f = rec.frame.f[static_cast<size_t>(i)];
    dev = std::max({dev, std::abs(dot(u, u) - 1), std::abs(dot(e, e) - 1),
                    std::abs(dot(f, f) - 1), std::abs(dot(u, e)), std::abs(dot(u, f)),
                    std::abs(dot(e, f))});
  }
  return dev;
}

double roundtrip_residual(const SphereMapField& u) {
  const HasimotoResult fwd = hasimoto_transform(u);
  const ReconstructResult rec = reconstruct(fwd.q);
  double sup = 0;
  for (int i = 0; i < u.size(); ++i) sup = std::max(sup, norm(u[i] - rec.u[i]));
  return sup;
}

namespace {

double weighted_l2_sq(const RadialGrid& g, const std::vector<Complex>& f, int inv_r_power) {
  double s = 0;
  for (int i = 0; i < g.n; ++i) {
    double scale = 1;
    for (int p = 0; p < inv_r_power; ++p) scale /= g.node(i);
    s += g.weight(i) * std::norm(f[static_cast<size_t>(i)]) * scale * scale;
  }
  return s;
}

double weighted_l2_sq(const RadialGrid& g, const std::vector<Vec3>& f, int inv_r_power) {
  double s = 0;
  for (int i = 0; i < g.n; ++i) {
    double scale = 1;
    for (int p = 0; p < inv_r_power; ++p) scale /= g.node(i);
    s += g.weight(i) * dot(f[static_cast<size_t>(i)], f[static_cast<size_t>(i)]) * scale * scale;
  }
  return s;
}

}  // namespace

NormEquivalenceReport norm_equivalence_report(const SphereMapField& u) {
  const RadialGrid& g = *u.grid;
  const ComplexRadialField q = hasimoto_transform(u).q;
  const auto q_r = radial_derivative(g, q.v);
  const auto q_rr = radial_derivative2(g, q.v);
  const auto u_r = radial_derivative(g, u.v);
  const auto u_rr = radial_derivative2(g, u.v);
  const auto u_rrr = radial_derivative3(g, u.v);

  NormEquivalenceReport rep;
  rep.w_h1 = std::sqrt(weighted_l2_sq(g, q.v, 0) + weighted_l2_sq(g, q_r, 0) +
                       weighted_l2_sq(g, q.v, 1));
  rep.gradu_h1 = std::sqrt(weighted_l2_sq(g, u_r, 0) + weighted_l2_sq(g, u_rr, 0) +
                           weighted_l2_sq(g, u_r, 1));
  rep.w_h2 = std::sqrt(rep.w_h1 * rep.w_h1 + weighted_l2_sq(g, q_rr, 0) +
                       weighted_l2_sq(g, q_r, 1) + weighted_l2_sq(g, q.v, 2));
  rep.gradu_h2 = std::sqrt(rep.gradu_h1 * rep.gradu_h1 + weighted_l2_sq(g, u_rrr, 0) +
                           weighted_l2_sq(g, u_rr, 1) + weighted_l2_sq(g, u_r, 2));

  if (rep.w_h1 == 0 && rep.gradu_h1 == 0) {
    rep.degenerate = true;
    return rep;
  }
  rep.ratio_w_h1 = rep.w_h1 / (rep.gradu_h1 + rep.gradu_h1 * rep.gradu_h1);
  rep.ratio_u_h1 = rep.gradu_h1 / (rep.w_h1 + rep.w_h1 * rep.w_h1);
  rep.ratio_w_h2 = rep.w_h2 / (rep.gradu_h2 + rep.gradu_h1 * rep.gradu_h1 * rep.gradu_h1);
  rep.ratio_u_h2 = rep.gradu_h2 / (rep.w_h2 + rep.w_h1 * rep.w_h1 * rep.w_h1);
  return rep;
}

TailIntegralBound tail_integral_check(const RealRadialField& f, double R) {
  const RadialGrid& g = *f.grid;
  if (!(R > 0) || R >= g.r_max)
    throw std::invalid_argument("tail_integral_check: need 0 < R < r_max");
  const int n = g.n;
  const double h = g.h;

  // F(r_i) = integral_{r_i}^{r_max} f ds for the piecewise-constant extension
  std::vector<double> F(static_cast<size_t>(n));
  double tail = 0;
  for (int i = n - 1; i >= 0; --i) {
    F[static_cast<size_t>(i)] = f[i] * (h / 2) + tail;
    tail += f[i] * h;
  }

  // plain r dr measure on [R, r_max] (no 2 pi factor here)
  TailIntegralBound out;
  double lhs_sq = 0;
  for (int i = 0; i < n; ++i) {
    const double r = g.node(i);
    if (r < R) continue;
    lhs_sq += h * r * F[static_cast<size_t>(i)] * F[static_cast<size_t>(i)];
    out.rhs += h * r * std::abs(f[i]);
  }
  out.lhs = std::sqrt(lhs_sq);
  return out;
}

}  // namespace rsm
