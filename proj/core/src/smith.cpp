#include "kf/smith.hpp"

#include <algorithm>
#include <functional>

#include "kf/error.hpp"

namespace kf {

namespace {

// Keeps B = U * S * V and U * U_inv = I, V * V_inv = I under elementary operations on S.
struct Work {
  MatPoly S, U, Ui, V, Vi;

  explicit Work(const MatPoly& B)
      : S(B),
        U(MatPoly::identity(B.rows())),
        Ui(MatPoly::identity(B.rows())),
        V(MatPoly::identity(B.cols())),
        Vi(MatPoly::identity(B.cols())) {}

  static void swap_r(MatPoly& m, size_t a, size_t b) {
    for (size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
  }
  static void swap_c(MatPoly& m, size_t a, size_t b) {
    for (size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
  }

  void row_swap(size_t a, size_t b) {
    if (a == b) return;
    swap_r(S, a, b);
    swap_c(U, a, b);
    swap_r(Ui, a, b);
  }
  // row t += q * row s
  void row_add(size_t t, size_t s, const Poly& q) {
    if (q.is_zero()) return;
    for (size_t j = 0; j < S.cols(); ++j) S(t, j) += q * S(s, j);
    for (size_t i = 0; i < U.rows(); ++i) U(i, s) -= q * U(i, t);
    for (size_t j = 0; j < Ui.cols(); ++j) Ui(t, j) += q * Ui(s, j);
  }
  void row_scale(size_t t, const GaussianRational& c) {
    Poly pc(c), pi(c.inv());
    for (size_t j = 0; j < S.cols(); ++j) S(t, j) *= pc;
    for (size_t i = 0; i < U.rows(); ++i) U(i, t) *= pi;
    for (size_t j = 0; j < Ui.cols(); ++j) Ui(t, j) *= pc;
  }
  void col_swap(size_t a, size_t b) {
    if (a == b) return;
    swap_c(S, a, b);
    swap_r(V, a, b);
    swap_c(Vi, a, b);
  }
  // col t += q * col s
  void col_add(size_t t, size_t s, const Poly& q) {
    if (q.is_zero()) return;
    for (size_t i = 0; i < S.rows(); ++i) S(i, t) += q * S(i, s);
    for (size_t j = 0; j < V.cols(); ++j) V(s, j) -= q * V(t, j);
    for (size_t i = 0; i < Vi.rows(); ++i) Vi(i, t) += q * Vi(i, s);
  }
};

}  // namespace

MatPoly SmithForm::middle(size_t rows, size_t cols) const {
  MatPoly D(rows, cols);
  for (size_t k = 0; k < l; ++k) D(k, k) = factors[k];
  return D;
}

bool SmithForm::all_factors_constant() const {
  return std::all_of(factors.begin(), factors.end(), [](const Poly& b) { return b.degree() == 0; });
}

SmithForm smith(const MatPoly& B) {
  if (B.is_zero()) fail(Errc::ZeroMatrix, "Smith form of the zero matrix");
  Work w(B);
  MatPoly& S = w.S;
  size_t R = B.rows(), C = B.cols();
  size_t t = 0;
  for (; t < std::min(R, C); ++t) {
    int best = -1;
    size_t bi = 0, bj = 0;
    for (size_t i = t; i < R; ++i)
      for (size_t j = t; j < C; ++j) {
        int dg = S(i, j).degree();
        if (dg >= 0 && (best < 0 || dg < best)) best = dg, bi = i, bj = j;
      }
    if (best < 0) break;
    w.row_swap(t, bi);
    w.col_swap(t, bj);
    while (true) {
      for (size_t i = t + 1; i < R; ++i)
        if (!S(i, t).is_zero()) w.row_add(i, t, -divmod(S(i, t), S(t, t)).first);
      int md = -1;
      size_t mi = 0;
      for (size_t i = t + 1; i < R; ++i) {
        int dg = S(i, t).degree();
        if (dg >= 0 && (md < 0 || dg < md)) md = dg, mi = i;
      }
      if (md >= 0) {
        w.row_swap(t, mi);
        continue;
      }
      for (size_t j = t + 1; j < C; ++j)
        if (!S(t, j).is_zero()) w.col_add(j, t, -divmod(S(t, j), S(t, t)).first);
      md = -1;
      size_t mj = 0;
      for (size_t j = t + 1; j < C; ++j) {
        int dg = S(t, j).degree();
        if (dg >= 0 && (md < 0 || dg < md)) md = dg, mj = j;
      }
      if (md >= 0) {
        w.col_swap(t, mj);
        continue;
      }
      bool divisible = true;
      for (size_t i = t + 1; i < R && divisible; ++i)
        for (size_t j = t + 1; j < C; ++j)
          if (!divmod(S(i, j), S(t, t)).second.is_zero()) {
            w.row_add(t, i, Poly(1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    w.row_scale(t, S(t, t).lead().inv());
  }
  size_t l = t;
  for (size_t k = 0; k < l / 2; ++k) {
    if (S(k, k) == S(l - 1 - k, l - 1 - k)) continue;
    w.row_swap(k, l - 1 - k);
    w.col_swap(k, l - 1 - k);
  }
  SmithForm sf;
  sf.l = l;
  for (size_t k = 0; k < l; ++k) sf.factors.push_back(S(k, k));
  sf.U = std::move(w.U);
  sf.V = std::move(w.V);
  sf.U_inv = std::move(w.Ui);
  sf.V_inv = std::move(w.Vi);
  return sf;
}

namespace {

RowReducedForm reduce_rows(const MatPoly& P) {
  RowReducedForm rr;
  rr.S = P;
  rr.U = MatPoly::identity(P.rows());
  while (true) {
    RowData rd;
    rd.leading = CMat(P.rows(), P.cols());
    for (size_t i = 0; i < P.rows(); ++i) {
      int s = 0;
      for (size_t j = 0; j < P.cols(); ++j) s = std::max(s, rr.S(i, j).degree());
      rd.sigma.push_back(s);
      for (size_t j = 0; j < P.cols(); ++j) rd.leading(i, j) = rr.S(i, j).coeff(s);
    }
    CMat ker = nullspace(rd.leading.transpose());
    if (ker.cols() == 0) {
      rr.sigma = rd.sigma;
      rr.S_inf = rd.leading;
      return rr;
    }
    size_t r = 0;
    bool found = false;
    for (size_t j = 0; j < P.rows(); ++j)
      if (!ker(j, 0).is_zero() && (!found || rd.sigma[j] >= rd.sigma[r])) r = j, found = true;
    GaussianRational cr = ker(r, 0).inv();
    for (size_t j = 0; j < P.rows(); ++j) {
      if (j == r || ker(j, 0).is_zero()) continue;
      Poly q = Poly::monomial(ker(j, 0) * cr, rd.sigma[r] - rd.sigma[j]);
      for (size_t k = 0; k < P.cols(); ++k) rr.S(r, k) += q * rr.S(j, k);
      for (size_t k = 0; k < P.rows(); ++k) rr.U(r, k) += q * rr.U(j, k);
    }
  }
}

void require_full_row_rank(const MatPoly& P) {
  if (P.rows() == 0 || generic_rank(P) < P.rows())
    fail(Errc::RankDeficient, "generic rank is below the row count");
}

}  // namespace

RowReducedForm row_reduce(const MatPoly& P) {
  if (P.rows() == 0) fail(Errc::NotFullRank, "empty matrix");
  SmithForm sf = smith(P);
  if (sf.l < P.rows() || !sf.all_factors_constant())
    fail(Errc::NotFullRank, "matrix loses rank at some point");
  return reduce_rows(P);
}

std::vector<int> forney_indices(const MatPoly& P) {
  require_full_row_rank(P);
  SmithForm sf = smith(P);
  MatPoly T = sf.all_factors_constant() ? P : sf.V.block(0, 0, P.rows(), P.cols());
  std::vector<int> s = reduce_rows(T).sigma;
  std::sort(s.begin(), s.end(), std::greater<int>());
  return s;
}

FullRankFactorization full_rank_factorize(const MatPoly& P) {
  require_full_row_rank(P);
  SmithForm sf = smith(P);
  size_t d = P.rows();
  FullRankFactorization f;
  f.G = sf.U * MatPoly::diag(sf.factors);
  f.T = sf.V.block(0, 0, d, P.cols());
  if (f.G * f.T != P) fail(Errc::InternalVerificationFailed, "G * T does not reproduce the input");
  return f;
}

bool is_unimodular(const MatPoly& P) {
  if (!P.is_square()) fail(Errc::NotSquare, "unimodularity of a non-square matrix");
  return det(P).degree() == 0;
}

}  // namespace kf
