#pragma once

#include <string>
#include <vector>

#include "kf/matrix.hpp"
#include "kf/poly.hpp"

namespace kf {

// rows x cols matrix with polynomial entries.
class MatPoly {
 public:
  MatPoly() = default;
  MatPoly(size_t rows, size_t cols) : r_(rows), c_(cols), e_(rows * cols) {}

  static MatPoly identity(size_t n);
  static MatPoly constant(const CMat& m);
  // Sum of coeffs[s] * z^s.
  static MatPoly from_coeffs(size_t rows, size_t cols, const std::vector<CMat>& coeffs);
  static MatPoly from_rows(const std::vector<std::vector<Poly>>& rows);
  static MatPoly diag(const std::vector<Poly>& d);

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  bool is_square() const { return r_ == c_; }

  Poly& operator()(size_t i, size_t j) { return e_[i * c_ + j]; }
  const Poly& operator()(size_t i, size_t j) const { return e_[i * c_ + j]; }

  bool is_zero() const;
  int degree() const;  // max entry degree, Poly::kMinusInf for zero
  bool is_constant() const { return degree() <= 0; }
  CMat coeff(int s) const;
  std::vector<CMat> coeffs() const;  // degree+1 matrices

  MatPoly block(size_t i0, size_t j0, size_t nr, size_t nc) const;
  void set_block(size_t i0, size_t j0, const MatPoly& b);
  MatPoly col(size_t j) const { return block(0, j, r_, 1); }
  MatPoly row(size_t i) const { return block(i, 0, 1, c_); }
  MatPoly select_cols(const std::vector<size_t>& js) const;
  MatPoly select_rows(const std::vector<size_t>& is) const;
  MatPoly transpose() const;
  MatPoly shift(int k) const;  // z^k * this

  MatPoly operator-() const;
  MatPoly& operator+=(const MatPoly& o);
  MatPoly& operator-=(const MatPoly& o);
  MatPoly& operator*=(const Poly& s);

  friend bool operator==(const MatPoly& a, const MatPoly& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.e_ == b.e_;
  }
  friend bool operator!=(const MatPoly& a, const MatPoly& b) { return !(a == b); }

 private:
  size_t r_ = 0;
  size_t c_ = 0;
  std::vector<Poly> e_;
};

inline MatPoly operator+(MatPoly a, const MatPoly& b) { return a += b; }
inline MatPoly operator-(MatPoly a, const MatPoly& b) { return a -= b; }
inline MatPoly operator*(MatPoly a, const Poly& s) { return a *= s; }
inline MatPoly operator*(const Poly& s, MatPoly a) { return a *= s; }
MatPoly operator*(const MatPoly& a, const MatPoly& b);
MatPoly operator*(const CMat& a, const MatPoly& b);
MatPoly operator*(const MatPoly& a, const CMat& b);

MatPoly hcat(const MatPoly& a, const MatPoly& b);
MatPoly vcat(const MatPoly& a, const MatPoly& b);
MatPoly block_diag(const MatPoly& a, const MatPoly& b);

// P~(z) = P(z*)^*: transposed shape, conjugated coefficients.
MatPoly para_conjugate(const MatPoly& p);
CMat eval(const MatPoly& p, const GaussianRational& alpha);
// Rank over the rational function field, by fraction-free elimination.
size_t generic_rank(const MatPoly& p);
// Determinant by Bareiss fraction-free elimination.
Poly det(const MatPoly& p);

struct RowData {
  std::vector<int> sigma;
  CMat leading;
  int extdeg = 0;
  int intdeg = 0;  // Poly::kMinusInf when every maximal minor vanishes
};

RowData row_data(const MatPoly& p);
// Largest degree among all maximal-size minors.
int internal_degree(const MatPoly& p);

// Rational matrix function num/den with den monic and coprime to the joint content of num.
class RatMat {
 public:
  RatMat() : den_(1) {}
  RatMat(MatPoly num) : num_(std::move(num)), den_(1) {}
  RatMat(MatPoly num, Poly den);
  static RatMat from_matrix(const Matrix<RatFunc>& m);

  const MatPoly& num() const { return num_; }
  const Poly& den() const { return den_; }
  size_t rows() const { return num_.rows(); }
  size_t cols() const { return num_.cols(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  RatFunc operator()(size_t i, size_t j) const { return RatFunc(num_(i, j), den_); }
  Matrix<RatFunc> to_matrix() const;
  CMat eval(const GaussianRational& alpha) const;  // DivisionByZero at a pole

  friend bool operator==(const RatMat& a, const RatMat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatMat& a, const RatMat& b) { return !(a == b); }

 private:
  MatPoly num_;
  Poly den_;
};

RatMat operator*(const RatMat& a, const RatMat& b);
RatMat operator+(const RatMat& a, const RatMat& b);
RatMat operator-(const RatMat& a, const RatMat& b);
RatMat para_conjugate(const RatMat& r);
// Inverse over the rational function field; Singular when det vanishes identically.
RatMat inverse(const MatPoly& p);
RatMat inverse(const RatMat& r);

struct ClearedColumns {
  Poly q;
  MatPoly B;
};

// Minimal monic q with q * columns polynomial.
ClearedColumns clear_denominators(const RatMat& columns);
ClearedColumns clear_denominators(const Matrix<RatFunc>& columns);

Matrix<RatFunc> to_ratfunc(const MatPoly& p);

}  // namespace kf
