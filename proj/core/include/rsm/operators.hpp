#pragma once

#include "rsm/field.hpp"

namespace rsm {

/// Tail integral against the logarithmic measure,
///   I(f)(r) = integral_r^{r_max} f(rho) drho/rho,
/// computed exactly for the piecewise-constant extension of the samples
/// (f is treated as zero beyond r_max).  Monotone non-increasing for f >= 0,
/// and the difference I(r_i) - I(r_{i+1}) telescopes to the exact cell
/// contribution between the two nodes.
RealRadialField nonlocal_I(const RealRadialField& f);

/// Radial Laplacian in the first angular-momentum sector,
///   q_rr + q_r / r - q / r^2,
/// second-order flux-form finite differences.  The ghost across r = 0 is the
/// odd extension q(-r) = -q(r) (its flux coefficient vanishes on this mesh);
/// beyond r_max the field is zero (Dirichlet).  Self-adjoint and negative
/// definite in the weighted inner product.
ComplexRadialField laplacian_m1(const ComplexRadialField& q);

/// Radial Laplacian f_rr + f_r / r for the zero angular-momentum sector,
/// applied componentwise; even ghost across r = 0 and a Neumann-compatible
/// ghost at r_max holding the boundary value (zero outer flux).
RealRadialField laplacian_m0(const RealRadialField& f);
SphereMapField laplacian_m0(const SphereMapField& f);

/// Centered second-order first derivative with one-sided second-order
/// stencils at both ends.
std::vector<double> radial_derivative(const RadialGrid& g, const std::vector<double>& f);
std::vector<Complex> radial_derivative(const RadialGrid& g, const std::vector<Complex>& f);
std::vector<Vec3> radial_derivative(const RadialGrid& g, const std::vector<Vec3>& f);
ComplexRadialField radial_derivative(const ComplexRadialField& q);

/// Second and third derivatives, centered where possible, one-sided at the
/// ends; used by the norm-comparison report.
std::vector<Complex> radial_derivative2(const RadialGrid& g, const std::vector<Complex>& f);
std::vector<Vec3> radial_derivative2(const RadialGrid& g, const std::vector<Vec3>& f);
std::vector<Complex> radial_derivative3(const RadialGrid& g, const std::vector<Complex>& f);
std::vector<Vec3> radial_derivative3(const RadialGrid& g, const std::vector<Vec3>& f);

}  // namespace rsm
