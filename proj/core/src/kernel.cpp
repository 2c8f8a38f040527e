#include "kf/kernel.hpp"

#include <algorithm>

#include "kf/error.hpp"

namespace kf {

int BiPoly::zdeg() const {
  int d = -1;
  for (const auto& [jk, m] : t_) d = std::max(d, jk.first);
  return d;
}

int BiPoly::wdeg() const {
  int d = -1;
  for (const auto& [jk, m] : t_) d = std::max(d, jk.second);
  return d;
}

CMat BiPoly::get(int j, int k) const {
  auto it = t_.find({j, k});
  return it == t_.end() ? CMat(r_, c_) : it->second;
}

void BiPoly::add(int j, int k, const CMat& m) {
  if (m.rows() != r_ || m.cols() != c_) fail(Errc::ShapeMismatch, "bivariate block shape");
  if (m.is_zero()) return;
  auto it = t_.find({j, k});
  if (it == t_.end()) {
    t_.emplace(std::make_pair(j, k), m);
    return;
  }
  it->second += m;
  if (it->second.is_zero()) t_.erase(it);
}

CMat BiPoly::eval(const GaussianRational& z, const GaussianRational& w) const {
  CMat out(r_, c_);
  GaussianRational wc = w.conj();
  for (const auto& [jk, m] : t_) {
    GaussianRational f(1);
    for (int s = 0; s < jk.first; ++s) f *= z;
    for (int s = 0; s < jk.second; ++s) f *= wc;
    out += m * f;
  }
  return out;
}

BiPoly BiPoly::mul_z(int q) const {
  BiPoly b(r_, c_);
  for (const auto& [jk, m] : t_) b.t_.emplace(std::make_pair(jk.first + q, jk.second), m);
  return b;
}

BiPoly BiPoly::mul_w(int q) const {
  BiPoly b(r_, c_);
  for (const auto& [jk, m] : t_) b.t_.emplace(std::make_pair(jk.first, jk.second + q), m);
  return b;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.r_ != r_ || o.c_ != c_) fail(Errc::ShapeMismatch, "bivariate sum shapes");
  for (const auto& [jk, m] : o.t_) add(jk.first, jk.second, m);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (o.r_ != r_ || o.c_ != c_) fail(Errc::ShapeMismatch, "bivariate difference shapes");
  for (const auto& [jk, m] : o.t_) add(jk.first, jk.second, -m);
  return *this;
}

BiPoly& BiPoly::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    t_.clear();
    return *this;
  }
  for (auto& [jk, m] : t_) m *= s;
  return *this;
}

BiPoly outer(const MatPoly& a, const MatPoly& b) {
  if (a.cols() != b.cols()) fail(Errc::ShapeMismatch, "outer product shapes");
  BiPoly out(a.rows(), b.rows());
  auto ac = a.coeffs();
  auto bc = b.coeffs();
  for (size_t j = 0; j < ac.size(); ++j) {
    if (ac[j].is_zero()) continue;
    for (size_t k = 0; k < bc.size(); ++k)
      if (!bc[k].is_zero()) out.add(j, k, ac[j] * adjoint(bc[k]));
  }
  return out;
}

BiPoly outer(const MatPoly& a, const CMat& x, const MatPoly& b) {
  return outer(a * x, b);
}

BivariateKernel::BivariateKernel(size_t d, std::vector<std::vector<CMat>> blocks)
    : d_(d), p_(blocks.size()), blocks_(std::move(blocks)) {
  for (size_t j = 0; j < p_; ++j) {
    if (blocks_[j].size() != p_) fail(Errc::ShapeMismatch, "kernel block grid is not square");
    for (size_t k = 0; k < p_; ++k)
      if (blocks_[j][k].rows() != d_ || blocks_[j][k].cols() != d_)
        fail(Errc::ShapeMismatch, "kernel block shape");
  }
  for (size_t j = 0; j < p_; ++j)
    for (size_t k = j; k < p_; ++k)
      if (blocks_[j][k] != adjoint(blocks_[k][j]))
        fail(Errc::NotHermitian, "kernel blocks violate A_jk = A_kj^*");
  trim();
}

void BivariateKernel::trim() {
  while (p_ > 0) {
    bool zero = true;
    for (size_t k = 0; k < p_ && zero; ++k)
      zero = blocks_[p_ - 1][k].is_zero() && blocks_[k][p_ - 1].is_zero();
    if (!zero) break;
    --p_;
    blocks_.pop_back();
    for (auto& row : blocks_) row.pop_back();
  }
}

BivariateKernel BivariateKernel::from_bipoly(const BiPoly& b) {
  if (b.rows() != b.cols()) fail(Errc::ShapeMismatch, "kernel must be square");
  size_t p = static_cast<size_t>(std::max(b.zdeg(), b.wdeg()) + 1);
  std::vector<std::vector<CMat>> blocks(p, std::vector<CMat>(p, CMat(b.rows(), b.rows())));
  for (const auto& [jk, m] : b.terms()) blocks[jk.first][jk.second] = m;
  return BivariateKernel(b.rows(), std::move(blocks));
}

BivariateKernel BivariateKernel::from_stack(size_t d, const CMat& stack) {
  if (d == 0 || stack.rows() != stack.cols() || stack.rows() % d != 0)
    fail(Errc::ShapeMismatch, "stack size is not a multiple of d");
  size_t p = stack.rows() / d;
  std::vector<std::vector<CMat>> blocks(p, std::vector<CMat>(p));
  for (size_t j = 0; j < p; ++j)
    for (size_t k = 0; k < p; ++k) blocks[j][k] = stack.block(j * d, k * d, d, d);
  return BivariateKernel(d, std::move(blocks));
}

CMat BivariateKernel::stack() const {
  CMat s(d_ * p_, d_ * p_);
  for (size_t j = 0; j < p_; ++j)
    for (size_t k = 0; k < p_; ++k) s.set_block(j * d_, k * d_, blocks_[j][k]);
  return s;
}

BiPoly BivariateKernel::to_bipoly() const {
  BiPoly b(d_, d_);
  for (size_t j = 0; j < p_; ++j)
    for (size_t k = 0; k < p_; ++k) b.add(j, k, blocks_[j][k]);
  return b;
}

CMat BivariateKernel::eval(const GaussianRational& z, const GaussianRational& w) const {
  return to_bipoly().eval(z, w);
}

BiPoly divide_z_minus_wstar(const BiPoly& numerator) {
  BiPoly q(numerator.rows(), numerator.cols());
  if (numerator.is_zero()) return q;
  int zmax = numerator.zdeg();
  int wmax = numerator.wdeg() + zmax;
  // Synthetic division in z by (z - w*): q_{a-1} = C_a + w* q_a, from the top.
  for (int a = zmax; a >= 1; --a)
    for (int b = 0; b <= wmax; ++b) {
      CMat v = numerator.get(a, b);
      if (b > 0) v += q.get(a, b - 1);
      q.add(a - 1, b, v);
    }
  for (int b = 0; b <= wmax + 1; ++b) {
    CMat r = numerator.get(0, b);
    if (b > 0) r += q.get(0, b - 1);
    if (!r.is_zero()) fail(Errc::NotDivisible, "numerator is not divisible by z - w*");
  }
  return q;
}

BivariateKernel divide_by_z_minus_wstar(const BiPoly& numerator) {
  return BivariateKernel::from_bipoly(divide_z_minus_wstar(numerator));
}

}  // namespace kf
