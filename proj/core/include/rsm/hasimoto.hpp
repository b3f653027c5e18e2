#pragma once

#include <vector>

#include "rsm/field.hpp"

namespace rsm {

/// Orthonormal tangent frame (e, f = u x e) along a radial map u, parallel in
/// the covariant sense D_r e = 0.
struct FrameField {
  GridPtr grid;
  std::vector<Vec3> e;
  std::vector<Vec3> f;
};

struct HasimotoResult {
  ComplexRadialField q;
  FrameField frame;
};

/// Construct the parallel frame by transporting inward from the outer
/// boundary.  The seed is e(r_max) = normalize(ihat - (ihat . u) u) at the
/// outermost node; the transport ODE e' = -(u_r . e) u is integrated
/// node-to-node with RK4 (fourth-order midpoint interpolation of u and u_r),
/// re-orthogonalizing against u and renormalizing at every node; f = u x e.
///
/// Preconditions: sphere constraint holds and |u(r_max) - khat| <= 0.1, so the
/// projected seed is well-conditioned; throws std::invalid_argument otherwise
/// (in particular when u(r_max) is nearly parallel to ihat).
FrameField build_frame(const SphereMapField& u);

/// Frame coordinates of the radial derivative:
///   q = (u_r . e) + i (u_r . f),
/// u_r by centered second-order differences (one-sided at the ends) projected
/// onto the tangent plane at u, so |q| = |u_r| holds exactly at the discrete
/// level.
ComplexRadialField compute_q(const SphereMapField& u, const FrameField& frame);

/// Full forward transform: build the parallel frame and extract q in one call.
HasimotoResult hasimoto_transform(const SphereMapField& u);

/// Integrate the linear frame system
///   u' = q1 e + q2 f,  e' = -q1 u,  f' = -q2 u
/// inward with RK4 from (u, e, f)(r_max) = (khat, ihat, jhat).  The generator
/// is skew, so the Gram matrix of (u, e, f) drifts only by integrator error;
/// no re-orthogonalization is applied here.
struct ReconstructResult {
  SphereMapField u;
  FrameField frame;
};
ReconstructResult reconstruct(const ComplexRadialField& q);

/// Maximum Gram-matrix deviation from the identity over all nodes of a
/// reconstructed (u, e, f) triple.
double gram_deviation(const ReconstructResult& rec);

/// sup-norm of u - reconstruct(compute_q(u, build_frame(u))).u; small for
/// smooth maps and O(h^2) under refinement.
double roundtrip_residual(const SphereMapField& u);

/// Both sides of the H^1 / H^2 comparison between w = e^{i theta} q and
/// grad u, as quadrature norms:
///   w_h1      = ( ||q||^2 + ||q_r||^2 + ||q/r||^2 )^{1/2}
///   gradu_h1  = ( ||u_r||^2 + ||u_rr||^2 + ||u_r/r||^2 )^{1/2}
///   w_h2      = ( w_h1^2 + ||q_rr||^2 + ||q_r/r||^2 + ||q/r^2||^2 )^{1/2}
///   gradu_h2  = ( gradu_h1^2 + ||u_rrr||^2 + ||u_rr/r||^2 + ||u_r/r^2||^2 )^{1/2}
/// and the four comparison ratios
///   ratio_w_h1 = w_h1 / (gradu_h1 + gradu_h1^2)
///   ratio_u_h1 = gradu_h1 / (w_h1 + w_h1^2)
///   ratio_w_h2 = w_h2 / (gradu_h2 + gradu_h1^3)
///   ratio_u_h2 = gradu_h2 / (w_h2 + w_h1^3).
/// `degenerate` is set when u is constant (all ratios 0/0).
struct NormEquivalenceReport {
  double w_h1 = 0, gradu_h1 = 0, w_h2 = 0, gradu_h2 = 0;
  double ratio_w_h1 = 0, ratio_u_h1 = 0, ratio_w_h2 = 0, ratio_u_h2 = 0;
  bool degenerate = false;
};
NormEquivalenceReport norm_equivalence_report(const SphereMapField& u);

/// Tail-integral comparison on [R, r_max]: with F(r) = integral_r^{r_max} f ds
/// (piecewise-constant extension, plain ds measure),
///   lhs = L^2(r dr) norm of F,   rhs = L^1(r dr) norm of f,
/// both without the 2 pi factor.  lhs <= rhs (1 + 10 h) on smooth data.
struct TailIntegralBound {
  double lhs = 0;
  double rhs = 0;
};
TailIntegralBound tail_integral_check(const RealRadialField& f, double R);

}  // namespace rsm
