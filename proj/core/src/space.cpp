#include "kf/space.hpp"

#include <algorithm>

#include "kf/error.hpp"
#include "kf/smith.hpp"

namespace kf {

const char* range_kind_name(RangeKind k) {
  switch (k) {
    case RangeKind::FailsEverywhere: return "fails-everywhere";
    case RangeKind::HoldsGenerically: return "holds-generically";
    case RangeKind::HoldsEverywhere: return "holds-everywhere";
  }
  return "unknown";
}

CMat coeff_stack(const MatPoly& B, size_t blocks) {
  CMat s(B.rows() * blocks, B.cols());
  for (size_t k = 0; k < blocks; ++k) s.set_block(k * B.rows(), 0, B.coeff(static_cast<int>(k)));
  return s;
}

std::optional<CMat> coordinates(const MatPoly& basis, const MatPoly& f) {
  if (f.rows() != basis.rows()) fail(Errc::ShapeMismatch, "coordinate vector height");
  if (f.degree() > basis.degree()) return std::nullopt;
  size_t blocks = static_cast<size_t>(std::max(basis.degree(), 0) + 1);
  return solve(coeff_stack(basis, blocks), coeff_stack(f, blocks));
}

namespace {

// Null space of [stack(z^j B) | -stack(B)], split into (c; e) halves.
CMat power_relation(const MatPoly& B, int j) {
  size_t blocks = static_cast<size_t>(std::max(B.degree(), 0) + j + 1);
  CMat M = hcat(coeff_stack(B.shift(j), blocks), -coeff_stack(B, blocks));
  return nullspace(M);
}

}  // namespace

size_t power_domain_dim(const MatPoly& basis, int j) {
  if (basis.cols() == 0) return 0;
  return power_relation(basis, j).cols();
}

GaussianRational inner(const PontryaginSpace& s, const CMat& c, const CMat& e) {
  return (adjoint(e) * s.gram * c)(0, 0);
}

PontryaginSpace make_space(const MatPoly& B, const CMat& G) {
  if (G.rows() != B.cols() || G.cols() != B.cols())
    fail(Errc::ShapeMismatch, "Gram matrix size differs from the basis column count");
  if (!is_hermitian(G)) fail(Errc::NotHermitian, "Gram matrix is not Hermitian");
  size_t n = B.cols();
  if (n > 0) {
    size_t blocks = static_cast<size_t>(std::max(B.degree(), 0) + 1);
    if (rank(coeff_stack(B, blocks)) != n) fail(Errc::DependentBasis, "basis columns are dependent");
    if (rank(G) != n) fail(Errc::SingularGram, "Gram matrix is singular");
  }
  return {B.rows(), n, B, G};
}

BivariateKernel reproducing_kernel(const PontryaginSpace& s) {
  if (s.n == 0) return BivariateKernel(s.d);
  CMat Ginv = herm_solve(s.gram, CMat::identity(s.n));
  return BivariateKernel::from_bipoly(outer(s.basis, Ginv, s.basis));
}

PontryaginSpace kernel_factor(const BivariateKernel& K) {
  size_t d = K.d();
  if (K.is_zero()) return {d, 0, MatPoly(d, 0), CMat()};
  CMat A = K.stack();
  std::vector<size_t> J = independent_columns(A);
  CMat AJ = A.select_cols(J);
  std::vector<CMat> coeffs;
  for (size_t s = 0; s < K.p(); ++s) coeffs.push_back(AJ.block(s * d, 0, d, J.size()));
  MatPoly B = MatPoly::from_coeffs(d, J.size(), coeffs);
  CMat G = AJ.select_rows(J);
  if (rank(G) != J.size()) fail(Errc::DegenerateKernel, "middle matrix is singular");
  PontryaginSpace sp = make_space(B, G);
  if (reproducing_kernel(sp) != K)
    fail(Errc::InternalVerificationFailed, "factorization does not reproduce the kernel");
  return sp;
}

OperatorData multiplication_operator(const PontryaginSpace& s) {
  if (s.n == 0) return {CMat(0, 0), CMat(0, 0)};
  CMat N = power_relation(s.basis, 1);
  return {N.block(0, 0, s.n, N.cols()), N.block(s.n, 0, s.n, N.cols())};
}

bool is_symmetric(const PontryaginSpace& s) {
  OperatorData op = multiplication_operator(s);
  if (op.m() == 0) return true;
  return adjoint(op.C) * s.gram * op.Z == adjoint(op.Z) * s.gram * op.C;
}

size_t defect_numbers(const PontryaginSpace& s) {
  if (!is_symmetric(s)) fail(Errc::NotSymmetric, "multiplication operator is not symmetric");
  return s.n - multiplication_operator(s).m();
}

bool range_condition_at(const PontryaginSpace& s, const GaussianRational& alpha) {
  return multiplication_operator(s).m() == s.n - rank(eval(s.basis, alpha));
}

namespace {

RangeCondition classify(const PontryaginSpace& s, size_t m, size_t* l_out) {
  RangeCondition rc;
  if (s.n == 0) {
    *l_out = 0;
    rc.kind = RangeKind::HoldsEverywhere;
    rc.excluded = Poly(1);
    return rc;
  }
  SmithForm sf = smith(s.basis);
  *l_out = sf.l;
  if (sf.l + m != s.n) return rc;
  rc.excluded = sf.factors[0];
  if (rc.excluded.degree() == 0) {
    rc.kind = RangeKind::HoldsEverywhere;
    return rc;
  }
  rc.kind = RangeKind::HoldsGenerically;
  for (long k = 0;; ++k)
    if (!rc.excluded(GaussianRational(k)).is_zero()) {
      rc.witness = GaussianRational(k);
      break;
    }
  return rc;
}

}  // namespace

RangeCondition range_condition_classify(const PontryaginSpace& s) {
  size_t l = 0;
  return classify(s, multiplication_operator(s).m(), &l);
}

Inertia negative_squares(const BivariateKernel& K) {
  if (K.is_zero()) return {};
  return inertia(K.stack());
}

Inertia doubled_kernel_indices(const BivariateKernel& K, size_t q) {
  if (q < K.p()) fail(Errc::QTooSmall, "q is below the kernel degree bound");
  BiPoly k = K.to_bipoly();
  BiPoly L = GaussianRational::i() * (k.mul_z(static_cast<int>(q)) - k.mul_w(static_cast<int>(q)));
  return negative_squares(BivariateKernel::from_bipoly(L));
}

DegreeFiltration degree_filtration(const PontryaginSpace& s) {
  DegreeFiltration f;
  std::vector<size_t> dims{s.n};
  while (dims.back() > 0) dims.push_back(power_domain_dim(s.basis, static_cast<int>(dims.size())));
  f.m_max = dims.size() >= 2 ? dims.size() - 2 : 0;
  for (size_t j = 0; j + 1 < dims.size(); ++j) f.deltas.push_back(dims[j] - dims[j + 1]);
  if (f.deltas.empty()) f.deltas.push_back(0);
  for (size_t k = 1; k <= s.d; ++k) {
    int mu = 0;
    for (size_t j = 0; j < f.deltas.size(); ++j)
      if (f.deltas[j] >= k) mu = static_cast<int>(j) + 1;
    f.mus.push_back(mu);
  }
  return f;
}

AnalysisReport analyze(const PontryaginSpace& s) {
  AnalysisReport r;
  OperatorData op = multiplication_operator(s);
  r.n = s.n;
  r.dom_dim = op.m();
  r.cond_a = op.m() == 0 || adjoint(op.C) * s.gram * op.Z == adjoint(op.Z) * s.gram * op.C;
  r.cond_b = classify(s, op.m(), &r.smith_rank);
  if (r.cond_a) r.defect = s.n - op.m();
  if (s.n > 0) {
    Inertia in = inertia(s.gram);
    r.plus = in.plus;
    r.minus = in.minus;
  }
  if (r.cond_b.kind != RangeKind::FailsEverywhere) r.degrees = degree_filtration(s).mus;
  r.is_nevanlinna = r.cond_a && r.cond_b.kind != RangeKind::FailsEverywhere;
  r.is_full = r.cond_a && r.cond_b.kind == RangeKind::HoldsEverywhere;
  return r;
}

}  // namespace kf
