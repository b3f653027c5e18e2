#include "rsm/diagnostics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "rsm/nls.hpp"
#include "rsm/operators.hpp"

namespace rsm {

double mass(const ComplexRadialField& q) { return l2_norm_sq(q); }

double energy(const SphereMapField& u) {
  const RadialGrid& g = *u.grid;
  const double h = g.h;
  double s = 0;
  // faces between cells i and i+1 sit at radius (i+1) h; the r = 0 face and
  // the pinned outer face carry no flux
  for (int i = 0; i + 1 < g.n; ++i) {
    const Vec3 d = u[i + 1] - u[i];
    s += (i + 1) * h * dot(d, d);
  }
  return std::numbers::pi * s / h;
}

double mass_dev(const SphereMapField& u) {
  double s = 0;
  for (int i = 0; i < u.size(); ++i) {
    const Vec3 d = u[i] - khat;
    s += u.grid->weight(i) * dot(d, d);
  }
  return s;
}

FunctionalPair virial_pair(const ComplexRadialField& q, const NlsParams& p) {
  const RadialGrid& g = *q.grid;
  const auto qr = radial_derivative(g, q.v);
  FunctionalPair out;
  for (int i = 0; i < g.n; ++i) {
    const double r = g.node(i), w = g.weight(i);
    const double a2 = std::norm(q[i]);
    out.value += 0.5 * w * r * r * a2;
    out.rhs += w * (4 * std::norm(qr[static_cast<size_t>(i)]) + 4 * a2 / (r * r) +
                    (2 * p.K - p.lambda) * a2 * a2);
  }
  return out;
}

FunctionalPair morawetz_pair(const ComplexRadialField& q, const NlsParams& p) {
  const RadialGrid& g = *q.grid;
  FunctionalPair out;
  for (int i = 0; i < g.n; ++i) {
    const double r = g.node(i), w = g.weight(i);
    const double a2 = std::norm(q[i]);
    out.value += w * r * a2;
    out.rhs += w * (3 * a2 / (r * r * r) + (2 * p.K - 0.5 * p.lambda) * a2 * a2 / r);
  }
  return out;
}

FunctionalPair local_virial_pair(const ComplexRadialField& q, const NlsParams& p, double R) {
  const RadialGrid& g = *q.grid;
  if (!(R >= 4 * g.h)) throw std::invalid_argument("local_virial_pair: need R >= 4h");
  const auto qr = radial_derivative(g, q.v);
  const double mu = 0.25 * (2 * p.K - p.lambda);
  FunctionalPair out;
  for (int i = 0; i < g.n; ++i) {
    const double r = g.node(i), w = g.weight(i);
    const double a2 = std::norm(q[i]);
    const double a4 = a2 * a2;
    const double dr2 = std::norm(qr[static_cast<size_t>(i)]);
    const CutoffValues phi = cutoff_phi_R(r, R);
    const double im = std::imag(std::conj(q[i]) * qr[static_cast<size_t>(i)]);
    out.value += w * r * im * phi.chi;
    const double core = dr2 + a2 / (r * r) + mu * a4;
    out.rhs += 2 * w *
               (core + core * (phi.chi - 1.0) +
                (dr2 - 0.75 * a2 / (r * r) - (p.lambda / 8.0) * a4) * r * phi.chi_p -
                1.25 * a2 / (r * r) * r * r * phi.chi_pp -
                0.25 * a2 / (r * r) * r * r * r * phi.chi_ppp);
  }
  return out;
}

FunctionalPair morawetz_P_pair(const ComplexRadialField& q, const NlsParams& p) {
  const RadialGrid& g = *q.grid;
  const auto qr = radial_derivative(g, q.v);
  const double mu = 0.25 * (2 * p.K - p.lambda);
  FunctionalPair out;
  for (int i = 0; i < g.n; ++i) {
    const double r = g.node(i), w = g.weight(i);
    const MorawetzWeights mw = weight_functions(r);
    const double a2 = std::norm(q[i]);
    const double im = std::imag(std::conj(q[i]) * qr[static_cast<size_t>(i)]);
    out.value += w * im * mw.psi;
    out.rhs += w * (2 * mw.psi_r * std::norm(qr[static_cast<size_t>(i)]) + mw.alpha * a2 / (r * r) +
                    (0.5 * p.K * mw.beta + mu * (mw.psi / r + mw.psi_r)) * a2 * a2);
  }
  return out;
}

double l4_spacetime_accumulate(const std::vector<double>& t, const std::vector<double>& l4_norm4) {
  if (t.size() != l4_norm4.size())
    throw std::invalid_argument("l4_spacetime_accumulate: length mismatch");
  double acc = 0;
  for (size_t i = 1; i < t.size(); ++i)
    acc += 0.5 * (t[i] - t[i - 1]) * (l4_norm4[i] + l4_norm4[i - 1]);
  return acc;
}

DiagnosticsRow nls_diagnostics_row(double t, const ComplexRadialField& q, const NlsParams& p,
                                   double local_virial_R, double l4_accum) {
  DiagnosticsRow row;
  row.t = t;
  row.mass_q = mass(q);
  const auto vir = virial_pair(q, p);
  row.virial_V = vir.value;
  row.virial_rhs = vir.rhs;
  const auto mor = morawetz_pair(q, p);
  row.morawetz_M = mor.value;
  row.morawetz_rhs = mor.rhs;
  const auto mom = morawetz_P_pair(q, p);
  row.P = mom.value;
  row.P_rhs = mom.rhs;
  const auto loc = local_virial_pair(q, p, local_virial_R);
  row.I_R = loc.value;
  row.I_R_rhs = loc.rhs;
  row.l4_accum = l4_accum;
  return row;
}

}  // namespace rsm
