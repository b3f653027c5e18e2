#pragma once

#include <vector>

#include "rsm/field.hpp"
#include "rsm/weights.hpp"

namespace rsm {

struct NlsParams;  // nls.hpp

/// Per-time record of the conserved / monotone functionals and the
/// right-hand sides of their evolution identities.  Column order matches the
/// time-series CSV.
struct DiagnosticsRow {
  double t = 0;
  double mass_q = 0;        // ||q||_{L^2}^2
  double energy_u = 0;      // E(u) when a map is present, else 0
  double mass_u = 0;        // ||u - khat||_{L^2}^2 when a map is present
  double virial_V = 0;      // (1/2) int r^2 |q|^2 r dr
  double virial_rhs = 0;    // d^2/dt^2 of virial_V
  double morawetz_M = 0;    // int r |q|^2 r dr
  double morawetz_rhs = 0;  // d^2/dt^2 of morawetz_M
  double P = 0;             // int Im(conj(q) q_r) psi r dr
  double P_rhs = 0;         // d/dt of P
  double I_R = 0;           // int r Im(conj(q) q_r) phi_R r dr
  double I_R_rhs = 0;       // d/dt of I_R
  double l4_accum = 0;      // running int_0^t ||q||_{L^4}^4 dt'
};

/// ||q||_{L^2(R^2)}^2 by quadrature.
double mass(const ComplexRadialField& q);

/// Dirichlet energy E(u) = (1/2) ||grad u||_{L^2(R^2)}^2 of a radial map,
/// evaluated in the face-staggered form
///   E = (1/2) sum_faces 2 pi r_face h |u_{i+1} - u_i|^2 / h^2,
/// a midpoint quadrature of (1/2) int |u_r|^2 2 pi r dr that is exactly
/// conserved by the semi-discrete Schrödinger-map flow.
double energy(const SphereMapField& u);

/// ||u - khat||_{L^2(R^2)}^2.
double mass_dev(const SphereMapField& u);

/// Virial pair: V = (1/2) int r^2 |q|^2 r dr and the identity value
///   d^2V/dt^2 = int { 4|q_r|^2 + 4|q|^2/r^2 + (2K - lambda)|q|^4 } r dr.
/// Along a solution trajectory the centered second time-difference of V
/// matches rhs up to O(dt^2) + O(h^2).
struct FunctionalPair {
  double value = 0;
  double rhs = 0;
};
FunctionalPair virial_pair(const ComplexRadialField& q, const NlsParams& p);

/// Morawetz pair: M = int r |q|^2 r dr and
///   d^2M/dt^2 = int { 3|q|^2/r^3 + (2K - lambda/2)|q|^4/r } r dr.
FunctionalPair morawetz_pair(const ComplexRadialField& q, const NlsParams& p);

/// Localized virial: I_R = int r Im(conj(q) q_r) phi_R r dr with
/// phi_R = chi(r/R), and the first-derivative identity
///   dI_R/dt = 2 int { (|q_r|^2 + |q|^2/r^2 + mu |q|^4)
///                   + (|q_r|^2 + |q|^2/r^2 + mu |q|^4)(phi_R - 1)
///                   + (|q_r|^2 - (3/4)|q|^2/r^2 - (lambda/8)|q|^4) r (phi_R)_r
///                   - (5/4)(|q|^2/r^2) r^2 (phi_R)_rr
///                   - (1/4)(|q|^2/r^2) r^3 (phi_R)_rrr } r dr,
/// mu = (2K - lambda)/4.  Requires R >= 4h.
FunctionalPair local_virial_pair(const ComplexRadialField& q, const NlsParams& p, double R);

/// Weighted momentum: P = int Im(conj(q) q_r) psi r dr and
///   dP/dt = int { 2 psi_r |q_r|^2 + alpha |q|^2/r^2
///               + (K/2 beta + mu (psi/r + psi_r)) |q|^4 } r dr,
/// which is positive for q != 0 whenever 2K >= max(lambda, lambda/2); P is
/// then monotone increasing along solutions.
FunctionalPair morawetz_P_pair(const ComplexRadialField& q, const NlsParams& p);

/// Trapezoidal accumulation of int ||q(t)||_{L^4}^4 dt over uniformly spaced
/// samples.  `l4_norm4[i]` is ||q(t_i)||_{L^4}^4.
double l4_spacetime_accumulate(const std::vector<double>& t, const std::vector<double>& l4_norm4);

/// Assemble the q-side of a row (virial/Morawetz/momentum functionals and
/// their identity right-hand sides) at one time slice.
DiagnosticsRow nls_diagnostics_row(double t, const ComplexRadialField& q, const NlsParams& p,
                                   double local_virial_R, double l4_accum);

}  // namespace rsm
