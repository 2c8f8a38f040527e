#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "kf/error.hpp"
#include "kf/field.hpp"

namespace kf {

// Dense row-major matrix over a field-like element type T.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : r_(rows), c_(cols), a_(rows * cols, T(0)) {}
  Matrix(size_t rows, size_t cols, std::vector<T> data) : r_(rows), c_(cols), a_(std::move(data)) {
    if (a_.size() != r_ * c_) fail(Errc::ShapeMismatch, "matrix data size");
  }

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t k = 0; k < n; ++k) m(k, k) = T(1);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    size_t r = rows.size(), c = r ? rows[0].size() : 0;
    Matrix m(r, c);
    for (size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) fail(Errc::ShapeMismatch, "ragged rows");
      for (size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  size_t rows() const { return r_; }
  size_t cols() const { return c_; }
  bool empty() const { return r_ == 0 || c_ == 0; }

  T& operator()(size_t i, size_t j) { return a_[i * c_ + j]; }
  const T& operator()(size_t i, size_t j) const { return a_[i * c_ + j]; }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!kf::is_zero(x)) return false;
    return true;
  }
  bool is_square() const { return r_ == c_; }

  Matrix block(size_t i0, size_t j0, size_t nr, size_t nc) const {
    Matrix m(nr, nc);
    for (size_t i = 0; i < nr; ++i)
      for (size_t j = 0; j < nc; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
    return m;
  }
  void set_block(size_t i0, size_t j0, const Matrix& b) {
    for (size_t i = 0; i < b.rows(); ++i)
      for (size_t j = 0; j < b.cols(); ++j) (*this)(i0 + i, j0 + j) = b(i, j);
  }
  Matrix col(size_t j) const { return block(0, j, r_, 1); }
  Matrix row(size_t i) const { return block(i, 0, 1, c_); }
  Matrix select_cols(const std::vector<size_t>& js) const {
    Matrix m(r_, js.size());
    for (size_t i = 0; i < r_; ++i)
      for (size_t k = 0; k < js.size(); ++k) m(i, k) = (*this)(i, js[k]);
    return m;
  }
  Matrix select_rows(const std::vector<size_t>& is) const {
    Matrix m(is.size(), c_);
    for (size_t k = 0; k < is.size(); ++k)
      for (size_t j = 0; j < c_; ++j) m(k, j) = (*this)(is[k], j);
    return m;
  }
  Matrix transpose() const {
    Matrix m(c_, r_);
    for (size_t i = 0; i < r_; ++i)
      for (size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  void swap_rows(size_t a, size_t b) {
    if (a == b) return;
    for (size_t j = 0; j < c_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.r_ == y.r_ && x.c_ == y.c_ && x.a_ == y.a_;
  }
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : a_) x *= s;
    return *this;
  }
  Matrix operator-() const {
    Matrix m = *this;
    for (auto& x : m.a_) x = -x;
    return m;
  }

  const std::vector<T>& data() const { return a_; }

 private:
  void check_same(const Matrix& o) const {
    if (r_ != o.r_ || c_ != o.c_) fail(Errc::ShapeMismatch, "matrix sum shapes");
  }

  size_t r_ = 0;
  size_t c_ = 0;
  std::vector<T> a_;
};

template <class T>
Matrix<T> operator+(Matrix<T> a, const Matrix<T>& b) { return a += b; }
template <class T>
Matrix<T> operator-(Matrix<T> a, const Matrix<T>& b) { return a -= b; }
template <class T>
Matrix<T> operator*(Matrix<T> a, const T& s) { return a *= s; }
template <class T>
Matrix<T> operator*(const T& s, Matrix<T> a) { return a *= s; }

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) fail(Errc::ShapeMismatch, "matrix product shapes");
  Matrix<T> m(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      const T& x = a(i, k);
      if (is_zero(x)) continue;
      for (size_t j = 0; j < b.cols(); ++j)
        if (!is_zero(b(k, j))) m(i, j) += x * b(k, j);
    }
  return m;
}

template <class T>
Matrix<T> hcat(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) fail(Errc::ShapeMismatch, "hcat rows");
  Matrix<T> m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

template <class T>
Matrix<T> vcat(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.cols()) fail(Errc::ShapeMismatch, "vcat cols");
  Matrix<T> m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

template <class T>
Matrix<T> block_diag(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

template <class T>
struct Rref {
  Matrix<T> R;
  std::vector<size_t> pivots;
};

// Reduced row echelon form by Gauss-Jordan elimination, first nonzero pivot.
template <class T>
Rref<T> rref(Matrix<T> m) {
  std::vector<size_t> piv;
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, r);
    T inv = T(1) / m(r, c);
    for (size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      T f = m(i, c);
      for (size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(piv)};
}

template <class T>
size_t rank(const Matrix<T>& m) {
  return rref(m).pivots.size();
}

// Columns form a basis of {x : m x = 0}, one per free variable in index order.
template <class T>
Matrix<T> nullspace(const Matrix<T>& m) {
  auto [R, piv] = rref(m);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<size_t> free;
  for (size_t c = 0; c < m.cols(); ++c)
    if (!is_piv[c]) free.push_back(c);
  Matrix<T> N(m.cols(), free.size());
  for (size_t k = 0; k < free.size(); ++k) {
    N(free[k], k) = T(1);
    for (size_t i = 0; i < piv.size(); ++i) N(piv[i], k) = -R(i, free[k]);
  }
  return N;
}

// Some X with a X = b, or nullopt if inconsistent.
template <class T>
std::optional<Matrix<T>> solve(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) fail(Errc::ShapeMismatch, "solve shapes");
  auto [R, piv] = rref(hcat(a, b));
  Matrix<T> x(a.cols(), b.cols());
  for (size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] >= a.cols()) return std::nullopt;
    for (size_t j = 0; j < b.cols(); ++j) x(piv[i], j) = R(i, a.cols() + j);
  }
  return x;
}

template <class T>
std::optional<Matrix<T>> inverse(const Matrix<T>& a) {
  if (!a.is_square()) fail(Errc::NotSquare, "inverse of non-square matrix");
  if (rank(a) != a.rows()) return std::nullopt;
  return solve(a, Matrix<T>::identity(a.rows()));
}

template <class T>
T det(Matrix<T> m) {
  if (!m.is_square()) fail(Errc::NotSquare, "determinant of non-square matrix");
  T d(1);
  for (size_t c = 0; c < m.rows(); ++c) {
    size_t p = c;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) return T(0);
    if (p != c) {
      m.swap_rows(p, c);
      d = -d;
    }
    d *= m(c, c);
    T inv = T(1) / m(c, c);
    for (size_t i = c + 1; i < m.rows(); ++i) {
      if (is_zero(m(i, c))) continue;
      T f = m(i, c) * inv;
      for (size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(c, j);
    }
  }
  return d;
}

// Indices of the first maximal set of linearly independent columns.
template <class T>
std::vector<size_t> independent_columns(const Matrix<T>& m) {
  return rref(m).pivots;
}

using CMat = Matrix<GaussianRational>;

CMat adjoint(const CMat& m);
CMat conj(const CMat& m);
bool is_hermitian(const CMat& m);

}  // namespace kf
