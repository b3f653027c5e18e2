#include "rsm/hankel.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rsm {

Hankel1::Hankel1(GridPtr grid, double k_max, int m) : grid_(std::move(grid)) {
  if (!grid_) throw std::invalid_argument("Hankel1: null grid");
  const int n = grid_->n;
  m_ = (m > 0) ? m : n;
  k_max_ = (k_max > 0) ? k_max : std::numbers::pi / (2 * grid_->h);
  dk_ = k_max_ / m_;
  k_.resize(static_cast<size_t>(m_));
  for (int j = 0; j < m_; ++j) k_[static_cast<size_t>(j)] = (j + 0.5) * dk_;

  kernel_.resize(static_cast<size_t>(m_) * static_cast<size_t>(n));
  for (int j = 0; j < m_; ++j) {
    const double kj = k_[static_cast<size_t>(j)];
    double* row = kernel_.data() + static_cast<size_t>(j) * n;
    for (int i = 0; i < n; ++i) row[i] = boost::math::cyl_bessel_j(1, kj * grid_->node(i));
  }
}

std::vector<Complex> Hankel1::forward(const ComplexRadialField& q) const {
  if (!same_grid(*q.grid, *grid_)) throw std::invalid_argument("Hankel1::forward: grid mismatch");
  const int n = grid_->n;
  const double h = grid_->h;
  std::vector<Complex> out(static_cast<size_t>(m_));
  for (int j = 0; j < m_; ++j) {
    const double* row = kernel_.data() + static_cast<size_t>(j) * n;
    Complex s = 0;
    for (int i = 0; i < n; ++i) s += (h * grid_->node(i) * row[i]) * q[i];
    out[static_cast<size_t>(j)] = s;
  }
  return out;
}

ComplexRadialField Hankel1::inverse(const std::vector<Complex>& qh) const {
  if (static_cast<int>(qh.size()) != m_)
    throw std::invalid_argument("Hankel1::inverse: coefficient count mismatch");
  const int n = grid_->n;
  ComplexRadialField out(grid_);
  for (int i = 0; i < n; ++i) {
    Complex s = 0;
    for (int j = 0; j < m_; ++j)
      s += (dk_ * k_[static_cast<size_t>(j)] * kernel_[static_cast<size_t>(j) * n + i]) *
           qh[static_cast<size_t>(j)];
    out[i] = s;
  }
  return out;
}

ComplexRadialField Hankel1::free_evolution(const ComplexRadialField& q0, double t) const {
  auto qh = forward(q0);
  for (int j = 0; j < m_; ++j) {
    const double k = k_[static_cast<size_t>(j)];
    qh[static_cast<size_t>(j)] *= std::exp(Complex(0, -k * k * t));
  }
  return inverse(qh);
}

}  // namespace rsm
