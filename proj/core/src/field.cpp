#include "rsm/field.hpp"

#include <cmath>

namespace rsm {

double integrate(const RealRadialField& f) {
  double s = 0;
  for (int i = 0; i < f.size(); ++i) s += f.grid->weight(i) * f[i];
  return s;
}

double l2_norm_sq(const ComplexRadialField& q) {
  double s = 0;
  for (int i = 0; i < q.size(); ++i) s += q.grid->weight(i) * std::norm(q[i]);
  return s;
}

double l2_norm(const ComplexRadialField& q) { return std::sqrt(l2_norm_sq(q)); }

double l4_norm_4(const ComplexRadialField& q) {
  double s = 0;
  for (int i = 0; i < q.size(); ++i) {
    const double a2 = std::norm(q[i]);
    s += q.grid->weight(i) * a2 * a2;
  }
  return s;
}

double lp_norm(const RealRadialField& f, double p) {
  double s = 0;
  for (int i = 0; i < f.size(); ++i) s += f.grid->weight(i) * std::pow(std::abs(f[i]), p);
  return std::pow(s, 1.0 / p);
}

Complex inner(const ComplexRadialField& a, const ComplexRadialField& b) {
  Complex s = 0;
  for (int i = 0; i < a.size(); ++i) s += a.grid->weight(i) * std::conj(a[i]) * b[i];
  return s;
}

double sup_diff(const ComplexRadialField& a, const ComplexRadialField& b) {
  double m = 0;
  for (int i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

RealRadialField abs2(const ComplexRadialField& q) {
  RealRadialField out(q.grid);
  for (int i = 0; i < q.size(); ++i) out[i] = std::norm(q[i]);
  return out;
}

RealRadialField abs_field(const ComplexRadialField& q) {
  RealRadialField out(q.grid);
  for (int i = 0; i < q.size(); ++i) out[i] = std::abs(q[i]);
  return out;
}

bool all_finite(const ComplexRadialField& q) {
  for (int i = 0; i < q.size(); ++i)
    if (!std::isfinite(q[i].real()) || !std::isfinite(q[i].imag())) return false;
  return true;
}

bool all_finite(const SphereMapField& u) {
  for (int i = 0; i < u.size(); ++i)
    if (!std::isfinite(u[i].x) || !std::isfinite(u[i].y) || !std::isfinite(u[i].z)) return false;
  return true;
}

}  // namespace rsm
