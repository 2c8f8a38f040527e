#include "kf/qfunction.hpp"

#include <random>

#include "kf/error.hpp"
#include "kf/hermitian.hpp"

namespace kf {

namespace {

const GaussianRational I = GaussianRational::i();

MatPoly pencil(const LinearRelation& A) {
  MatPoly F = MatPoly::constant(A.dom_part());
  MatPoly G = MatPoly::constant(A.ran_part());
  return G - F.shift(1);
}

// S^* Lambda [I; z0 I]: its null space is ker(S^* - z0).
CMat defect_equations(const PontryaginSpace& s, const GaussianRational& z0) {
  LinearRelation S = graph_relation(s);
  CMat stacked = vcat(CMat::identity(s.n), CMat::identity(s.n) * z0);
  return adjoint(S.pairs) * lagrange_form(s) * stacked;
}

size_t rank_union(const CMat& a, const CMat& b) {
  return a.cols() == 0 ? rank(b) : b.cols() == 0 ? rank(a) : rank(hcat(a, b));
}

}  // namespace

LinearRelation make_relation(size_t n, const CMat& spanning) {
  if (spanning.rows() != 2 * n) fail(Errc::ShapeMismatch, "relation pairs must have 2n rows");
  if (spanning.cols() == 0) return {n, CMat(2 * n, 0)};
  return {n, spanning.select_cols(independent_columns(spanning))};
}

LinearRelation graph_relation(const PontryaginSpace& s) {
  OperatorData op = multiplication_operator(s);
  if (op.m() == 0) return {s.n, CMat(2 * s.n, 0)};
  return {s.n, vcat(op.C, op.Z)};
}

CMat lagrange_form(const PontryaginSpace& s) {
  size_t n = s.n;
  CMat L(2 * n, 2 * n);
  L.set_block(0, n, s.gram * (-I));
  L.set_block(n, 0, s.gram * I);
  return L;
}

LinearRelation lagrange_adjoint(const PontryaginSpace& s, const LinearRelation& R) {
  if (R.n != s.n) fail(Errc::ShapeMismatch, "relation lives in another space");
  if (R.dim() == 0) return {s.n, CMat::identity(2 * s.n)};
  return {s.n, nullspace(adjoint(R.pairs) * lagrange_form(s))};
}

bool is_selfadjoint_extension(const PontryaginSpace& s, const LinearRelation& A) {
  if (A.n != s.n || A.dim() != s.n) return false;
  LinearRelation S = graph_relation(s);
  if (rank_union(A.pairs, S.pairs) != A.dim()) return false;
  if (s.n > 0 && !(adjoint(A.pairs) * lagrange_form(s) * A.pairs).is_zero()) return false;
  return s.n == 0 || !det(pencil(A)).is_zero();
}

RatMat resolvent(const PontryaginSpace& s, const LinearRelation& A) {
  if (A.n != s.n || A.dim() != s.n) fail(Errc::EmptyResolvent, "relation is not n-dimensional");
  if (s.n == 0) return RatMat();
  MatPoly pen = pencil(A);
  if (det(pen).is_zero()) fail(Errc::EmptyResolvent, "pencil is singular");
  return RatMat(MatPoly::constant(A.dom_part())) * inverse(pen);
}

CMat defect_basis(const PontryaginSpace& s, const GaussianRational& z0) {
  if (s.n == 0) return CMat();
  return nullspace(defect_equations(s, z0));
}

RatMat gamma_field(const PontryaginSpace& s, const LinearRelation& A, const GaussianRational& mu,
                   const CMat& gamma_mu) {
  if (mu.is_real()) fail(Errc::BadMu, "mu must be non-real");
  MatPoly pen = pencil(A);
  if (A.dim() != s.n || det(pen).is_zero() || det(pen)(mu).is_zero())
    fail(Errc::BadMu, "pencil is singular at mu");
  size_t l = defect_basis(s, mu).cols();
  if (gamma_mu.rows() != s.n || gamma_mu.cols() != l || rank(gamma_mu) != l ||
      !(defect_equations(s, mu) * gamma_mu).is_zero())
    fail(Errc::NotDefectBasis, "columns do not form a basis of ker(S^* - mu)");
  RatMat R = resolvent(s, A);
  RatMat zmu(MatPoly::identity(s.n) * (Poly::z() - Poly(mu)));
  RatMat g(MatPoly::constant(gamma_mu));
  return g + zmu * R * g;
}

QFunctionResult q_function(const PontryaginSpace& s, const LinearRelation& A,
                           const GaussianRational& mu, const CMat& gamma_mu, const CMat& Q0) {
  size_t l = gamma_mu.cols();
  if (Q0.rows() != l || Q0.cols() != l || !is_hermitian(Q0))
    fail(Errc::NotHermitian, "Q0 must be a Hermitian l x l matrix");
  QFunctionResult r;
  r.mu = mu;
  r.gamma_mu = gamma_mu;
  r.gamma = gamma_field(s, A, mu, gamma_mu);
  CMat gg = adjoint(gamma_mu) * s.gram;
  CMat c0 = Q0 - (gg * gamma_mu) * (I * GaussianRational(mu.im()));
  Poly lin = Poly::z() - Poly(mu.conj());
  RatMat tail = RatMat(MatPoly::constant(gg) * lin) * r.gamma;
  r.Q = RatMat(MatPoly::constant(c0)) + tail;

  if (para_conjugate(r.Q) != r.Q) fail(Errc::InternalVerificationFailed, "Q~ differs from Q");
  std::mt19937 rng(20240517u);
  std::uniform_int_distribution<int> pick(-9, 9);
  RatMat gt = para_conjugate(r.gamma);
  int checked = 0;
  for (int guard = 0; checked < 5 && guard < 200; ++guard) {
    GaussianRational z = GaussianRational::make(pick(rng), 1, pick(rng), 1);
    GaussianRational w = GaussianRational::make(pick(rng), 1, pick(rng), 1);
    GaussianRational gap = z - w.conj();
    if (gap.is_zero() || r.Q.den()(z).is_zero() || r.Q.den()(w).is_zero() ||
        r.gamma.den()(z).is_zero() || r.gamma.den()(w).is_zero())
      continue;
    CMat lhs = (r.Q.eval(z) - adjoint(r.Q.eval(w))) * gap.inv();
    CMat rhs = adjoint(r.gamma.eval(w)) * s.gram * r.gamma.eval(z);
    if (lhs != rhs) fail(Errc::InternalVerificationFailed, "Q-function kernel identity fails");
    ++checked;
  }
  return r;
}

NevanlinnaPair pair_from_q(const PontryaginSpace& s, const CanonicalDecomposition& dec,
                           const LinearRelation& A, const GaussianRational& mu,
                           const CMat& gamma_mu, const CMat& Q0) {
  size_t d = s.d, l = gamma_mu.cols();
  QFunctionResult qr = q_function(s, A, mu, gamma_mu, Q0);
  if (dec.W.rows() != d) fail(Errc::ShapeMismatch, "decomposition belongs to another space");
  NevanlinnaPair pr;
  if (l == 0) {
    pr.N = dec.W;
    pr.M = MatPoly(d, d);
  } else {
    auto Wc = coordinates(s.basis, dec.W.block(0, 0, d, l));
    if (!Wc) fail(Errc::PreconditionViolated, "leading columns of W are not in the space");
    RatMat phi = para_conjugate(qr.gamma) * RatMat(MatPoly::constant(s.gram * *Wc));
    RatMat N1 = inverse(phi);
    RatMat inner(block_diag(N1.num(), MatPoly::identity(d - l) * N1.den()), N1.den());
    RatMat N = RatMat(dec.W) * inner;
    RatMat Qpad(block_diag(qr.Q.num(), MatPoly(d - l, d - l)), qr.Q.den());
    RatMat M = N * Qpad;
    if (!N.is_polynomial() || !M.is_polynomial())
      fail(Errc::PolynomialityFailed, "M or N has a nontrivial denominator");
    pr.N = N.num();
    pr.M = M.num();
  }
  if (det(pr.N).is_zero()) fail(Errc::InternalVerificationFailed, "det N vanishes identically");
  if (kernel_of_pair(pr) != reproducing_kernel(s))
    fail(Errc::InternalVerificationFailed, "pair kernel differs from the space kernel");
  return pr;
}

LinearRelation operator_extension(const PontryaginSpace& s) {
  size_t n = s.n;
  if (!is_symmetric(s)) fail(Errc::NotSymmetric, "multiplication operator is not symmetric");
  if (n == 0) return {0, CMat()};
  OperatorData op = multiplication_operator(s);
  size_t m = op.m();
  CMat X = op.C;
  for (size_t k = 0; k < n && X.cols() < n; ++k) {
    CMat trial = X.cols() == 0 ? CMat::identity(n).col(k) : hcat(X, CMat::identity(n).col(k));
    if (rank(trial) == trial.cols()) X = trial;
  }
  CMat E = X.block(0, m, n, n - m);
  CMat Hp(n, n);
  if (m > 0) {
    CMat top = adjoint(op.C) * s.gram * op.Z;
    CMat side = adjoint(E) * s.gram * op.Z;
    Hp.set_block(0, 0, top);
    Hp.set_block(m, 0, side);
    Hp.set_block(0, m, adjoint(side));
  }
  CMat Xi = *inverse(X);
  CMat H = adjoint(Xi) * Hp * Xi;
  CMat T = herm_solve(s.gram, H);
  return make_relation(n, vcat(CMat::identity(n), T));
}

GaussianRational default_mu(const PontryaginSpace& s, const LinearRelation& A) {
  Poly dp = s.n == 0 ? Poly(1) : det(pencil(A));
  if (dp.is_zero()) fail(Errc::EmptyResolvent, "pencil is singular");
  for (long k = 0;; ++k) {
    GaussianRational mu(mpq_class(k), mpq_class(1));
    if (!dp(mu).is_zero()) return mu;
  }
}

}  // namespace kf
