#include "kf/matpoly.hpp"

#include <algorithm>
#include <numeric>

#include "kf/error.hpp"

namespace kf {

MatPoly MatPoly::identity(size_t n) {
  MatPoly m(n, n);
  for (size_t k = 0; k < n; ++k) m(k, k) = Poly(1);
  return m;
}

MatPoly MatPoly::constant(const CMat& c) {
  MatPoly m(c.rows(), c.cols());
  for (size_t i = 0; i < c.rows(); ++i)
    for (size_t j = 0; j < c.cols(); ++j) m(i, j) = Poly(c(i, j));
  return m;
}

MatPoly MatPoly::from_coeffs(size_t rows, size_t cols, const std::vector<CMat>& coeffs) {
  MatPoly m(rows, cols);
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) {
      std::vector<GaussianRational> v(coeffs.size());
      for (size_t s = 0; s < coeffs.size(); ++s) v[s] = coeffs[s](i, j);
      m(i, j) = Poly(std::move(v));
    }
  return m;
}

MatPoly MatPoly::from_rows(const std::vector<std::vector<Poly>>& rows) {
  size_t r = rows.size(), c = r ? rows[0].size() : 0;
  MatPoly m(r, c);
  for (size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) fail(Errc::ShapeMismatch, "ragged rows");
    for (size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

MatPoly MatPoly::diag(const std::vector<Poly>& d) {
  MatPoly m(d.size(), d.size());
  for (size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
  return m;
}

bool MatPoly::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Poly& p) { return p.is_zero(); });
}

int MatPoly::degree() const {
  int d = Poly::kMinusInf;
  for (const auto& p : e_) d = std::max(d, p.degree());
  return d;
}

CMat MatPoly::coeff(int s) const {
  CMat m(r_, c_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) m(i, j) = (*this)(i, j).coeff(s);
  return m;
}

std::vector<CMat> MatPoly::coeffs() const {
  std::vector<CMat> out;
  for (int s = 0; s <= degree(); ++s) out.push_back(coeff(s));
  return out;
}

MatPoly MatPoly::block(size_t i0, size_t j0, size_t nr, size_t nc) const {
  if (i0 + nr > r_ || j0 + nc > c_) fail(Errc::ShapeMismatch, "block out of range");
  MatPoly m(nr, nc);
  for (size_t i = 0; i < nr; ++i)
    for (size_t j = 0; j < nc; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
  return m;
}

void MatPoly::set_block(size_t i0, size_t j0, const MatPoly& b) {
  if (i0 + b.r_ > r_ || j0 + b.c_ > c_) fail(Errc::ShapeMismatch, "block out of range");
  for (size_t i = 0; i < b.r_; ++i)
    for (size_t j = 0; j < b.c_; ++j) (*this)(i0 + i, j0 + j) = b(i, j);
}

MatPoly MatPoly::select_cols(const std::vector<size_t>& js) const {
  MatPoly m(r_, js.size());
  for (size_t i = 0; i < r_; ++i)
    for (size_t k = 0; k < js.size(); ++k) m(i, k) = (*this)(i, js[k]);
  return m;
}

MatPoly MatPoly::select_rows(const std::vector<size_t>& is) const {
  MatPoly m(is.size(), c_);
  for (size_t k = 0; k < is.size(); ++k)
    for (size_t j = 0; j < c_; ++j) m(k, j) = (*this)(is[k], j);
  return m;
}

MatPoly MatPoly::transpose() const {
  MatPoly m(c_, r_);
  for (size_t i = 0; i < r_; ++i)
    for (size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

MatPoly MatPoly::shift(int k) const {
  MatPoly m = *this;
  for (auto& p : m.e_) p = p.shift(k);
  return m;
}

MatPoly MatPoly::operator-() const {
  MatPoly m = *this;
  for (auto& p : m.e_) p = -p;
  return m;
}

MatPoly& MatPoly::operator+=(const MatPoly& o) {
  if (r_ != o.r_ || c_ != o.c_) fail(Errc::ShapeMismatch, "matpoly sum shapes");
  for (size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
  return *this;
}

MatPoly& MatPoly::operator-=(const MatPoly& o) {
  if (r_ != o.r_ || c_ != o.c_) fail(Errc::ShapeMismatch, "matpoly difference shapes");
  for (size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
  return *this;
}

MatPoly& MatPoly::operator*=(const Poly& s) {
  for (auto& p : e_) p *= s;
  return *this;
}

MatPoly operator*(const MatPoly& a, const MatPoly& b) {
  if (a.cols() != b.rows()) fail(Errc::ShapeMismatch, "matpoly product shapes");
  MatPoly m(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) m(i, j) += a(i, k) * b(k, j);
    }
  return m;
}

MatPoly operator*(const CMat& a, const MatPoly& b) { return MatPoly::constant(a) * b; }
MatPoly operator*(const MatPoly& a, const CMat& b) { return a * MatPoly::constant(b); }

MatPoly hcat(const MatPoly& a, const MatPoly& b) {
  if (a.rows() != b.rows()) fail(Errc::ShapeMismatch, "hcat rows");
  MatPoly m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

MatPoly vcat(const MatPoly& a, const MatPoly& b) {
  if (a.cols() != b.cols()) fail(Errc::ShapeMismatch, "vcat cols");
  MatPoly m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

MatPoly block_diag(const MatPoly& a, const MatPoly& b) {
  MatPoly m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

MatPoly para_conjugate(const MatPoly& p) {
  MatPoly m(p.cols(), p.rows());
  for (size_t i = 0; i < p.rows(); ++i)
    for (size_t j = 0; j < p.cols(); ++j) m(j, i) = p(i, j).conj();
  return m;
}

CMat eval(const MatPoly& p, const GaussianRational& alpha) {
  CMat m(p.rows(), p.cols());
  for (size_t i = 0; i < p.rows(); ++i)
    for (size_t j = 0; j < p.cols(); ++j) m(i, j) = p(i, j)(alpha);
  return m;
}

namespace {

struct Bareiss {
  size_t rank = 0;
  int sign = 1;
  std::vector<std::vector<Poly>> a;
};

// Fraction-free forward elimination; every stored entry after step k is a
// (k+1)x(k+1) minor, so the division by the previous pivot is exact.
Bareiss bareiss(const MatPoly& p) {
  Bareiss b;
  size_t R = p.rows(), C = p.cols();
  b.a.assign(R, std::vector<Poly>(C));
  for (size_t i = 0; i < R; ++i)
    for (size_t j = 0; j < C; ++j) b.a[i][j] = p(i, j);
  Poly prev(1);
  size_t r = 0;
  for (size_t c = 0; c < C && r < R; ++c) {
    size_t piv = r;
    while (piv < R && b.a[piv][c].is_zero()) ++piv;
    if (piv == R) continue;
    if (piv != r) {
      std::swap(b.a[piv], b.a[r]);
      b.sign = -b.sign;
    }
    for (size_t i = r + 1; i < R; ++i) {
      for (size_t j = c + 1; j < C; ++j) {
        Poly v = b.a[i][j] * b.a[r][c] - b.a[i][c] * b.a[r][j];
        b.a[i][j] = exact_div(v, prev);
      }
      b.a[i][c] = Poly();
    }
    prev = b.a[r][c];
    ++r;
  }
  b.rank = r;
  return b;
}

}  // namespace

size_t generic_rank(const MatPoly& p) {
  if (p.rows() == 0 || p.cols() == 0) return 0;
  return bareiss(p).rank;
}

Poly det(const MatPoly& p) {
  if (!p.is_square()) fail(Errc::NotSquare, "determinant of non-square matrix");
  size_t n = p.rows();
  if (n == 0) return Poly(1);
  Bareiss b = bareiss(p);
  if (b.rank < n) return Poly();
  Poly d = b.a[n - 1][n - 1];
  if (b.sign < 0) d = -d;
  return d;
}

int internal_degree(const MatPoly& p) {
  MatPoly q = p.rows() <= p.cols() ? p : p.transpose();
  size_t k = q.rows(), n = q.cols();
  if (k == 0) return 0;
  std::vector<size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  int best = Poly::kMinusInf;
  while (true) {
    best = std::max(best, det(q.select_cols(pick)).degree());
    int t = static_cast<int>(k) - 1;
    while (t >= 0 && pick[t] == n - k + t) --t;
    if (t < 0) break;
    ++pick[t];
    for (size_t s = t + 1; s < k; ++s) pick[s] = pick[s - 1] + 1;
  }
  return best;
}

RowData row_data(const MatPoly& p) {
  RowData rd;
  rd.leading = CMat(p.rows(), p.cols());
  for (size_t i = 0; i < p.rows(); ++i) {
    int s = 0;
    for (size_t j = 0; j < p.cols(); ++j) s = std::max(s, p(i, j).degree());
    rd.sigma.push_back(s);
    rd.extdeg += s;
    for (size_t j = 0; j < p.cols(); ++j) rd.leading(i, j) = p(i, j).coeff(s);
  }
  rd.intdeg = internal_degree(p);
  return rd;
}

RatMat::RatMat(MatPoly num, Poly den) {
  if (den.is_zero()) fail(Errc::DivisionByZero, "zero denominator");
  Poly g = den;
  for (size_t i = 0; i < num.rows() && g.degree() > 0; ++i)
    for (size_t j = 0; j < num.cols(); ++j) g = gcd(g, num(i, j));
  if (num.is_zero()) g = den;
  if (g.degree() > 0) {
    for (size_t i = 0; i < num.rows(); ++i)
      for (size_t j = 0; j < num.cols(); ++j) num(i, j) = exact_div(num(i, j), g);
    den = exact_div(den, g);
  }
  GaussianRational inv = den.lead().inv();
  num *= Poly(inv);
  den *= inv;
  num_ = std::move(num);
  den_ = std::move(den);
}

RatMat RatMat::from_matrix(const Matrix<RatFunc>& m) {
  auto cl = clear_denominators(m);
  return RatMat(std::move(cl.B), std::move(cl.q));
}

Matrix<RatFunc> RatMat::to_matrix() const {
  Matrix<RatFunc> m(rows(), cols());
  for (size_t i = 0; i < rows(); ++i)
    for (size_t j = 0; j < cols(); ++j) m(i, j) = (*this)(i, j);
  return m;
}

CMat RatMat::eval(const GaussianRational& alpha) const {
  GaussianRational d = den_(alpha);
  if (d.is_zero()) fail(Errc::DivisionByZero, "evaluation at a pole");
  CMat m = kf::eval(num_, alpha);
  m *= d.inv();
  return m;
}

Matrix<RatFunc> to_ratfunc(const MatPoly& p) {
  Matrix<RatFunc> m(p.rows(), p.cols());
  for (size_t i = 0; i < p.rows(); ++i)
    for (size_t j = 0; j < p.cols(); ++j) m(i, j) = RatFunc(p(i, j));
  return m;
}

RatMat operator*(const RatMat& a, const RatMat& b) {
  return RatMat(a.num() * b.num(), a.den() * b.den());
}

RatMat operator+(const RatMat& a, const RatMat& b) {
  if (a.den() == b.den()) return RatMat(a.num() + b.num(), a.den());
  Poly l = lcm(a.den(), b.den());
  return RatMat(a.num() * exact_div(l, a.den()) + b.num() * exact_div(l, b.den()), l);
}

RatMat operator-(const RatMat& a, const RatMat& b) {
  return a + RatMat(-b.num(), b.den());
}

RatMat para_conjugate(const RatMat& r) {
  return RatMat(para_conjugate(r.num()), r.den().conj());
}

RatMat inverse(const MatPoly& p) {
  if (!p.is_square()) fail(Errc::NotSquare, "inverse of non-square matrix");
  auto inv = kf::inverse(to_ratfunc(p));
  if (!inv) fail(Errc::Singular, "determinant vanishes identically");
  return RatMat::from_matrix(*inv);
}

RatMat inverse(const RatMat& r) {
  RatMat inv = inverse(r.num());
  return RatMat(inv.num() * r.den(), inv.den());
}

ClearedColumns clear_denominators(const Matrix<RatFunc>& columns) {
  Poly q(1);
  for (size_t i = 0; i < columns.rows(); ++i)
    for (size_t j = 0; j < columns.cols(); ++j) q = lcm(q, columns(i, j).den());
  MatPoly B(columns.rows(), columns.cols());
  for (size_t i = 0; i < columns.rows(); ++i)
    for (size_t j = 0; j < columns.cols(); ++j)
      B(i, j) = columns(i, j).num() * exact_div(q, columns(i, j).den());
  return {q, B};
}

ClearedColumns clear_denominators(const RatMat& columns) {
  return clear_denominators(columns.to_matrix());
}

}  // namespace kf
