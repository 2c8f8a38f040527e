#include "kf/canonical.hpp"

#include <algorithm>

#include "kf/error.hpp"
#include "kf/smith.hpp"

namespace kf {

namespace {

struct Canon {
  MatPoly W;
  MatPoly Wi;
  std::vector<int> mu;
};

Canon identity_canon(size_t d) {
  return {MatPoly::identity(d), MatPoly::identity(d), std::vector<int>(d, 0)};
}

// Span with trivial domain and full column rank everywhere: B = W [I; 0].
Canon constant_case(const MatPoly& B) {
  size_t d = B.rows(), n = B.cols();
  SmithForm sf = smith(B);
  if (sf.l != n || !sf.all_factors_constant())
    fail(Errc::InternalVerificationFailed, "constant step needs full column rank everywhere");
  Canon c;
  c.W = sf.U * block_diag(sf.V, MatPoly::identity(d - n));
  c.Wi = block_diag(sf.V_inv, MatPoly::identity(d - n)) * sf.U_inv;
  c.mu.assign(d, 0);
  std::fill(c.mu.begin(), c.mu.begin() + n, 1);
  return c;
}

// FB contains the canonical space with degrees nu + 1 on the coordinates where
// nu > 0; extend by a complement so that FB = W * canonical.
Canon extension_step(const MatPoly& FB, const std::vector<int>& nu) {
  size_t d = FB.rows(), n = FB.cols();
  size_t k = 0, s = 0;
  for (int v : nu)
    if (v > 0) ++k, s += v;
  std::vector<int> grown(d, 0);
  for (size_t i = 0; i < k; ++i) grown[i] = nu[i] + 1;
  if (s + k > n) fail(Errc::InternalVerificationFailed, "extension step dimension count");
  size_t j = n - s - k;
  if (j == 0) return {MatPoly::identity(d), MatPoly::identity(d), grown};

  size_t blocks = static_cast<size_t>(std::max(FB.degree(), *std::max_element(grown.begin(), grown.end())) + 1);
  CMat span = coeff_stack(canonical_basis(grown), blocks);
  std::vector<size_t> picked;
  for (size_t c = 0; c < n && picked.size() < j; ++c) {
    CMat trial = hcat(span, coeff_stack(FB.col(c), blocks));
    if (rank(trial) > span.cols()) {
      span = trial;
      picked.push_back(c);
    }
  }
  if (picked.size() != j) fail(Errc::InternalVerificationFailed, "complement has the wrong dimension");
  MatPoly B0 = FB.select_cols(picked);
  MatPoly top = B0.block(0, 0, k, j);
  MatPoly bottom = B0.block(k, 0, d - k, j);
  SmithForm sf = smith(bottom);
  if (sf.l != j || !sf.all_factors_constant())
    fail(Errc::InternalVerificationFailed, "complement loses rank at some point");
  size_t rest = d - k - j;
  MatPoly Wb = sf.U * block_diag(sf.V, MatPoly::identity(rest));
  MatPoly Wbi = block_diag(sf.V_inv, MatPoly::identity(rest)) * sf.U_inv;
  MatPoly Wt(k, d - k);
  Wt.set_block(0, 0, top);

  Canon c;
  c.W = MatPoly::identity(d);
  c.W.set_block(0, k, Wt);
  c.W.set_block(k, k, Wb);
  c.Wi = MatPoly::identity(d);
  c.Wi.set_block(0, k, -(Wt * Wbi));
  c.Wi.set_block(k, k, Wbi);
  c.mu = grown;
  for (size_t t = 0; t < j; ++t) c.mu[k + t] = 1;
  return c;
}

// Recursion on dom S; needs the range condition at every point.
Canon canon(const MatPoly& B) {
  size_t n = B.cols();
  if (n == 0) return identity_canon(B.rows());
  PontryaginSpace shape{B.rows(), n, B, CMat::identity(n)};
  OperatorData op = multiplication_operator(shape);
  if (op.m() == 0) return constant_case(B);
  if (op.m() >= n) fail(Errc::InternalVerificationFailed, "domain is not a proper subspace");
  Canon inner = canon(B * op.C);
  Canon step = extension_step(inner.Wi * B, inner.mu);
  return {inner.W * step.W, step.Wi * inner.Wi, step.mu};
}

}  // namespace

MatPoly canonical_basis(const std::vector<int>& degrees) {
  size_t d = degrees.size();
  int top = degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
  std::vector<std::pair<int, size_t>> cols;
  for (int j = 0; j < top; ++j)
    for (size_t i = 0; i < d; ++i)
      if (degrees[i] > j) cols.push_back({j, i});
  MatPoly C(d, cols.size());
  for (size_t c = 0; c < cols.size(); ++c) C(cols[c].second, c) = Poly::monomial(1, cols[c].first);
  return C;
}

CanonicalDecomposition decompose(const MatPoly& B) {
  size_t d = B.rows(), n = B.cols();
  CanonicalDecomposition dec;
  if (n == 0 || B.is_zero()) {
    if (n > 0) fail(Errc::DependentBasis, "basis columns are dependent");
    dec.W = MatPoly::identity(d);
    dec.degrees.assign(d, 0);
    dec.unimodular = true;
    return dec;
  }
  size_t blocks = static_cast<size_t>(B.degree() + 1);
  if (rank(coeff_stack(B, blocks)) != n) fail(Errc::DependentBasis, "basis columns are dependent");
  PontryaginSpace shape{d, n, B, CMat::identity(n)};
  size_t m = multiplication_operator(shape).m();
  SmithForm sf = smith(B);
  size_t l = sf.l;
  if (l + m != n) fail(Errc::RangeConditionFails, "Smith rank plus domain dimension differs from n");

  MatPoly F = sf.U * block_diag(MatPoly::diag(sf.factors), MatPoly::identity(d - l)) * sf.U_inv;
  MatPoly B1 = sf.U.block(0, 0, d, l) * sf.V.block(0, 0, l, n);
  Canon c = canon(B1);

  dec.W = F * c.W;
  dec.degrees = c.mu;
  dec.unimodular = sf.all_factors_constant();
  MatPoly X = c.Wi * B1;
  MatPoly Cb = canonical_basis(c.mu);
  if (Cb.cols() != n) fail(Errc::InternalVerificationFailed, "degrees do not sum to n");
  dec.T = CMat(n, n);
  for (size_t col = 0; col < n; ++col) {
    size_t i = 0;
    int j = 0;
    for (size_t r = 0; r < d; ++r)
      if (!Cb(r, col).is_zero()) i = r, j = Cb(r, col).degree();
    for (size_t t = 0; t < n; ++t) dec.T(col, t) = X(i, t).coeff(j);
  }
  if (Cb * dec.T != X || rank(dec.T) != n)
    fail(Errc::InternalVerificationFailed, "canonical factorization does not reproduce the basis");
  return dec;
}

bool membership(const CanonicalDecomposition& dec, const MatPoly& f) {
  if (f.rows() != dec.W.rows() || f.cols() != 1) fail(Errc::ShapeMismatch, "membership needs a column");
  RatMat g = inverse(dec.W) * RatMat(f);
  if (!g.is_polynomial()) return false;
  for (size_t i = 0; i < f.rows(); ++i)
    if (g.num()(i, 0).degree() >= dec.degrees[i]) return false;
  return true;
}

}  // namespace kf
