#include "rsm/weights.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rsm {

namespace {

MorawetzWeights finish(double r, double psi, double psi_r, double psi_rr, double psi_rrr) {
  MorawetzWeights w;
  w.psi = psi;
  w.psi_r = psi_r;
  w.psi_rr = psi_rr;
  w.psi_rrr = psi_rrr;
  w.alpha = 0.5 * psi_r + 1.5 * psi / r - r * psi_rr - 0.5 * r * r * psi_rrr;
  w.beta = psi / r - psi_r;
  return w;
}

}  // namespace

MorawetzWeights weight_functions_inner(double r) {
  return finish(r, 4 * r - r * r, 4 - 2 * r, -2.0, 0.0);
}

MorawetzWeights weight_functions_outer(double r) {
  const double ir = 1.0 / r;
  const double ir2 = ir * ir, ir3 = ir2 * ir, ir4 = ir3 * ir, ir5 = ir4 * ir;
  return finish(r, 6 - 4 * ir + ir2, 4 * ir2 - 2 * ir3, -8 * ir3 + 6 * ir4, 24 * ir4 - 24 * ir5);
}

MorawetzWeights weight_functions(double r) {
  if (!(r > 0)) throw std::invalid_argument("weight_functions: need r > 0, got " + std::to_string(r));
  return (r <= 1.0) ? weight_functions_inner(r) : weight_functions_outer(r);
}

CutoffValues cutoff_chi(double s) {
  CutoffValues c;
  if (s <= 1.0) {
    c.chi = 1.0;
    return c;
  }
  if (s >= 2.0) return c;  // all zero
  const double g = s - 1.0;
  const double g2 = g * g, g3 = g2 * g, g4 = g3 * g, g5 = g4 * g, g6 = g5 * g, g7 = g6 * g;
  c.chi = 1.0 - 35 * g4 + 84 * g5 - 70 * g6 + 20 * g7;
  c.chi_p = -140 * g3 + 420 * g4 - 420 * g5 + 140 * g6;
  c.chi_pp = -420 * g2 + 1680 * g3 - 2100 * g4 + 840 * g5;
  c.chi_ppp = -840 * g + 5040 * g2 - 8400 * g3 + 4200 * g4;
  return c;
}

CutoffValues cutoff_phi_R(double r, double R) {
  CutoffValues c = cutoff_chi(r / R);
  const double iR = 1.0 / R;
  c.chi_p *= iR;
  c.chi_pp *= iR * iR;
  c.chi_ppp *= iR * iR * iR;
  return c;
}

}  // namespace rsm
