#pragma once

namespace rsm {

/// Morawetz weight psi and the derived positive coefficients, evaluated in
/// closed form on both branches:
///   psi(r) = 4r - r^2            for 0 < r <= 1,
///   psi(r) = 6 - 4/r + 1/r^2     for r > 1,
/// alpha = psi_r/2 + (3/2) psi/r - r psi_rr - (r^2/2) psi_rrr,
/// beta  = psi/r - psi_r.
/// psi is C^3 across r = 1 with 0 < psi < 6, psi_r > 0, alpha > 0, beta > 0
/// on (0, infinity).
struct MorawetzWeights {
  double psi = 0, psi_r = 0, psi_rr = 0, psi_rrr = 0;
  double alpha = 0, beta = 0;
};

/// Evaluate at r > 0 (throws std::invalid_argument for r <= 0).
MorawetzWeights weight_functions(double r);

// Single-branch evaluations, exposed so the audit can compare the two
// closed forms at the seam r = 1.
MorawetzWeights weight_functions_inner(double r);  // polynomial branch
MorawetzWeights weight_functions_outer(double r);  // rational branch

/// C^3 smoothstep cutoff: chi = 1 on [0,1], 0 on [2,inf), and on (1,2)
///   chi(s) = 1 - 35 sg^4 + 84 sg^5 - 70 sg^6 + 20 sg^7,  sg = s - 1,
/// whose first three derivatives vanish at both seam points.
struct CutoffValues {
  double chi = 0, chi_p = 0, chi_pp = 0, chi_ppp = 0;
};
CutoffValues cutoff_chi(double s);

/// phi_R(r) = chi(r / R) and its first three r-derivatives.
CutoffValues cutoff_phi_R(double r, double R);

}  // namespace rsm
