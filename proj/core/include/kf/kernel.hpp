#pragma once

#include <map>
#include <utility>
#include <vector>

#include "kf/matpoly.hpp"

namespace kf {

// Matrix polynomial in z and w*: sum of C_{jk} z^j w*^k.
class BiPoly {
 public:
  BiPoly(size_t rows = 0, size_t cols = 0) : r_(rows), c_(cols) {}

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  int zdeg() const;  // -1 when zero
  int wdeg() const;
  bool is_zero() const { return t_.empty(); }

  CMat get(int j, int k) const;
  void add(int j, int k, const CMat& m);
  const std::map<std::pair<int, int>, CMat>& terms() const { return t_; }

  // sum C_{jk} z^j conj(w)^k
  CMat eval(const GaussianRational& z, const GaussianRational& w) const;
  BiPoly mul_z(int q) const;
  BiPoly mul_w(int q) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const GaussianRational& s);

  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.t_ == b.t_;
  }

 private:
  size_t r_, c_;
  std::map<std::pair<int, int>, CMat> t_;  // only nonzero blocks
};

inline BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
inline BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
inline BiPoly operator*(const GaussianRational& s, BiPoly a) { return a *= s; }

// A(z) B(w)^*
BiPoly outer(const MatPoly& a, const MatPoly& b);
// A(z) X B(w)^*
BiPoly outer(const MatPoly& a, const CMat& x, const MatPoly& b);

// Hermitian kernel K(z,w) = sum A_{jk} z^j w*^k, 0 <= j,k < p, p minimal.
class BivariateKernel {
 public:
  BivariateKernel() = default;
  explicit BivariateKernel(size_t d) : d_(d) {}
  // Validates shapes and A_{jk} = A_{kj}^*, then trims p.
  BivariateKernel(size_t d, std::vector<std::vector<CMat>> blocks);
  static BivariateKernel from_bipoly(const BiPoly& b);
  static BivariateKernel from_stack(size_t d, const CMat& stack);

  size_t d() const { return d_; }
  size_t p() const { return p_; }
  bool is_zero() const { return p_ == 0; }
  const CMat& block(size_t j, size_t k) const { return blocks_[j][k]; }
  const std::vector<std::vector<CMat>>& blocks() const { return blocks_; }

  // The dp x dp self-adjoint block matrix with block (j,k) = A_{jk}.
  CMat stack() const;
  BiPoly to_bipoly() const;
  CMat eval(const GaussianRational& z, const GaussianRational& w) const;

  friend bool operator==(const BivariateKernel& a, const BivariateKernel& b) {
    return a.d_ == b.d_ && a.p_ == b.p_ && a.blocks_ == b.blocks_;
  }
  friend bool operator!=(const BivariateKernel& a, const BivariateKernel& b) { return !(a == b); }

 private:
  void trim();
  size_t d_ = 0;
  size_t p_ = 0;
  std::vector<std::vector<CMat>> blocks_;
};

// Exact quotient K with (z - w*) K = numerator; NotDivisible on a nonzero remainder.
BiPoly divide_z_minus_wstar(const BiPoly& numerator);
BivariateKernel divide_by_z_minus_wstar(const BiPoly& numerator);

}  // namespace kf
