#pragma once

// Test-only reference implementations, kept independent of the library code
// paths they are used to check.

#include <complex>
#include <functional>
#include <vector>

#include "rsm/field.hpp"

namespace oracle {

/// Bessel J0 / J1 by the integral representations
///   J0(x) = (1/pi) int_0^pi cos(x sin t) dt
///   J1(x) = (1/pi) int_0^pi cos(t - x sin t) dt
/// with a fixed high-order composite Simpson rule; ~1e-12 absolute accuracy
/// over the argument ranges the tests use.
double bessel_j0(double x);
double bessel_j1(double x);

/// Adaptive Simpson quadrature on [a, b] to absolute tolerance tol.
double integrate(const std::function<double(double)>& f, double a, double b, double tol = 1e-12);

/// Closed-form free evolution of q0(r) = amp * r * exp(-r^2/sigma^2) in the
/// first angular-momentum sector:
///   q(r,t) = amp * sigma^4 * r / (sigma^2 + 4 i t)^2 * exp(-r^2 / (sigma^2 + 4 i t)).
std::complex<double> gauss_free_evolution(double amp, double sigma, double r, double t);

/// Dense midpoint quadrature of the order-nu Hankel transform
/// int_0^{r_hi} f(r) Jnu(k r) r dr at a single frequency, with `samples`
/// subdivisions (reference for transform identities).
double hankel_dense(const std::function<double(double)>& f, int nu, double k, double r_hi,
                    int samples = 20000);

/// Observed order from two errors under mesh halving.
inline double observed_order(double coarse, double fine) { return std::log2(coarse / fine); }

/// L2-relative difference of two fields on the same grid.
double l2_rel_diff(const rsm::ComplexRadialField& a, const rsm::ComplexRadialField& b);

}  // namespace oracle
