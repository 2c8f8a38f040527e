#include "kf/pairsynth.hpp"

#include <algorithm>

#include "kf/canonical.hpp"
#include "kf/error.hpp"
#include "kf/hermitian.hpp"
#include "kf/smith.hpp"

namespace kf {

namespace {

const GaussianRational I = GaussianRational::i();

BiPoly times_i_z_minus_wstar(const BivariateKernel& K) {
  BiPoly k = K.to_bipoly();
  return I * (k.mul_z(1) - k.mul_w(1));
}

size_t signature_half(const CMat& Q) {
  Inertia in = inertia(Q);
  return in.zero == 0 && in.plus == in.minus ? in.plus : static_cast<size_t>(-1);
}

}  // namespace

CMat j_matrix(size_t d) {
  CMat J(2 * d, 2 * d);
  for (size_t k = 0; k < d; ++k) {
    J(k, d + k) = I;
    J(d + k, k) = -I;
  }
  return J;
}

NevanlinnaForm synthesize(const PontryaginSpace& s) {
  AnalysisReport rep = analyze(s);
  if (!rep.is_nevanlinna) fail(Errc::NotNevanlinna, "space fails the Nevanlinna criterion");
  size_t d = s.d, l = rep.smith_rank;
  BivariateKernel K = reproducing_kernel(s);
  BiPoly L1 = times_i_z_minus_wstar(K);
  PontryaginSpace first = kernel_factor(BivariateKernel::from_bipoly(L1));
  if (first.n != 2 * l || signature_half(first.gram) != l)
    fail(Errc::InternalVerificationFailed, "doubled kernel does not have index (l, l)");
  CanonicalDecomposition dec = decompose(s.basis);
  MatPoly tail = dec.W.block(0, l, d, d - l);

  NevanlinnaForm f;
  f.P = hcat(first.basis, hcat(tail, tail));
  f.Q = block_diag(first.gram, j_matrix(d - l));
  SmithForm sf = smith(f.P);
  f.full = sf.l == d && sf.all_factors_constant();
  if (outer(f.P, *inverse(f.Q), f.P) != L1)
    fail(Errc::InternalVerificationFailed, "synthesized form does not reproduce i(z - w*)K");
  return f;
}

FormCheck verify_form(const NevanlinnaForm& form, const BivariateKernel& K) {
  size_t d = form.P.rows();
  if (K.d() != d || form.P.cols() != 2 * d || form.Q.rows() != 2 * d || form.Q.cols() != 2 * d)
    return {false, "shape"};
  if (!is_hermitian(form.Q)) return {false, "Q is not Hermitian"};
  if (signature_half(form.Q) != d) return {false, "Q does not have signature (d, d)"};
  if (generic_rank(form.P) != d) return {false, "P is rank deficient"};
  if (outer(form.P, *inverse(form.Q), form.P) != times_i_z_minus_wstar(K))
    return {false, "P Q^-1 P(w)^* differs from i(z - w*)K"};
  return {true, "ok"};
}

BivariateKernel form_kernel(const NevanlinnaForm& form) {
  auto Qinv = inverse(form.Q);
  if (!Qinv) fail(Errc::Singular, "Q is singular");
  BiPoly num = (-I) * outer(form.P, *Qinv, form.P);
  return divide_by_z_minus_wstar(num);
}

BivariateKernel kernel_of_pair(const NevanlinnaPair& pair) {
  size_t d = pair.M.rows();
  if (pair.M.cols() != d || pair.N.rows() != d || pair.N.cols() != d)
    fail(Errc::ShapeMismatch, "pair matrices must be d x d");
  if (generic_rank(hcat(pair.M, pair.N)) != d)
    fail(Errc::NotANevanlinnaPair, "[M N] is rank deficient");
  BiPoly num = outer(pair.M, pair.N) - outer(pair.N, pair.M);
  try {
    return divide_by_z_minus_wstar(num);
  } catch (const Error& e) {
    if (e.code() == Errc::NotDivisible)
      fail(Errc::NotANevanlinnaPair, "M N~ - N M~ does not vanish");
    throw;
  }
}

std::optional<TwoSquares> two_squares(const mpq_class& r) {
  if (sgn(r) < 0) return std::nullopt;
  mpz_class N = r.get_num() * r.get_den();
  if (N > mpz_class("1000000000000")) return std::nullopt;
  mpz_class root = sqrt(N);
  for (mpz_class x = 0; x <= root; ++x) {
    mpz_class rest = N - x * x;
    mpz_class y = sqrt(rest);
    if (y * y == rest) return TwoSquares{x, y, r.get_den()};
  }
  return std::nullopt;
}

Extraction extract_pair(const NevanlinnaForm& form) {
  size_t d = form.P.rows();
  if (form.Q.rows() != 2 * d || form.P.cols() != 2 * d) fail(Errc::ShapeMismatch, "form shape");
  auto Qinv = inverse(form.Q);
  if (!Qinv) fail(Errc::Singular, "Q is singular");
  CongruenceDiagonal cd = congruence_diagonalize(*Qinv);
  std::vector<size_t> pos, neg;
  for (size_t k = 0; k < cd.D.size(); ++k) (sgn(cd.D[k]) > 0 ? pos : neg).push_back(k);
  if (pos.size() != d || neg.size() != d)
    fail(Errc::PreconditionViolated, "Q does not have signature (d, d)");

  // Y J Y^* = diag(D): each (p, -q) pair uses the hyperbolic block rows
  // (1, ip/2) and (c, -icp/2) with |c|^2 = q/p.
  CMat Y(2 * d, 2 * d);
  std::vector<bool> used(d, false);
  Extraction out;
  for (size_t t = 0; t < d; ++t) {
    const mpq_class& p = cd.D[pos[t]];
    std::optional<TwoSquares> rep;
    size_t pick = 0;
    bool first = true;
    for (size_t u = 0; u < d && !rep; ++u) {
      if (used[u]) continue;
      mpq_class ratio = -cd.D[neg[u]] / p;
      if (first) out.ratio = ratio, first = false;
      rep = two_squares(ratio);
      pick = u;
    }
    if (!rep) {
      out.reason = "pivot ratio is not a sum of two rational squares within the search bound";
      return out;
    }
    used[pick] = true;
    mpq_class cre(rep->x, rep->den), cim(rep->y, rep->den);
    cre.canonicalize();
    cim.canonicalize();
    GaussianRational c(cre, cim);
    GaussianRational half_p = I * GaussianRational(mpq_class(p / 2));
    Y(pos[t], t) = 1;
    Y(pos[t], d + t) = half_p;
    Y(neg[pick], t) = c;
    Y(neg[pick], d + t) = -(c * half_p);
  }
  CMat S = cd.L * Y;
  if (S * j_matrix(d) * adjoint(S) != *Qinv)
    fail(Errc::InternalVerificationFailed, "congruence transformer check failed");
  MatPoly MN = form.P * S;
  NevanlinnaPair pr{MN.block(0, 0, d, d), MN.block(0, d, d, d)};
  if (kernel_of_pair(pr) != form_kernel(form))
    fail(Errc::InternalVerificationFailed, "extracted pair has a different kernel");
  out.pair = pr;
  out.reason = "ok";
  return out;
}

NevanlinnaPair j_unitary_transform(const NevanlinnaPair& pair, const CMat& U) {
  size_t d = pair.M.rows();
  if (U.rows() != 2 * d || U.cols() != 2 * d) fail(Errc::ShapeMismatch, "U must be 2d x 2d");
  CMat J = j_matrix(d);
  if (U * J * adjoint(U) != J) fail(Errc::NotJUnitary, "U J U^* differs from J");
  MatPoly MN = hcat(pair.M, pair.N) * U;
  return {MN.block(0, 0, d, d), MN.block(0, d, d, d)};
}

LagrangeDims lagrange_dims(const MatPoly& P, const CMat& Q) {
  size_t d = P.rows();
  if (P.cols() != 2 * d || Q.rows() != 2 * d || Q.cols() != 2 * d)
    fail(Errc::PreconditionViolated, "shape: P must be d x 2d and Q 2d x 2d");
  if (!is_hermitian(Q) || signature_half(Q) != d)
    fail(Errc::PreconditionViolated, "signature: Q must be Hermitian with inertia (d, d, 0)");
  CMat Qinv = *inverse(Q);
  if (!(P * Qinv * para_conjugate(P)).is_zero())
    fail(Errc::PreconditionViolated, "neutrality: P Q^-1 P~ does not vanish");
  SmithForm sf = smith(P);
  if (sf.l != d || !sf.all_factors_constant())
    fail(Errc::PreconditionViolated, "full-rank: P loses rank at some point");
  RowData rd = row_data(P);
  if (rank(rd.leading) != d) fail(Errc::PreconditionViolated, "row-reduced: leading matrix is singular");
  int p = *std::max_element(rd.sigma.begin(), rd.sigma.end());
  if (p == 0) return {};
  size_t D2 = 2 * d, P_ = static_cast<size_t>(p);
  std::vector<CMat> Pc(P_ + 1);
  for (size_t t = 0; t <= P_; ++t) Pc[t] = adjoint(P.coeff(static_cast<int>(t)));

  // Spanning set: coefficient of w*^s in sum_k z^{p-1-k} w*^k P(w)^* e_i.
  CMat L(D2 * P_, d * (2 * P_));
  for (size_t s = 0; s < 2 * P_; ++s)
    for (size_t k = 0; k < P_; ++k) {
      if (s < k || s - k > P_) continue;
      size_t zpow = P_ - 1 - k;
      L.set_block(zpow * D2, s * d, Pc[s - k]);
    }
  CMat Omega(D2 * P_, D2 * P_);
  for (size_t j = 0; j < P_; ++j) Omega.set_block((P_ - 1 - j) * D2, j * D2, Qinv);
  size_t dim_L = rank(L);
  size_t perp_by_form = nullspace(adjoint(L) * Omega).cols();

  // Independent count: u of degree < p with deg(P~ u) < p.
  CMat High(D2 * P_, d * P_);
  for (size_t e = P_; e < 2 * P_; ++e)
    for (size_t r = 0; r < P_; ++r)
      if (e >= r && e - r <= P_) High.set_block((e - P_) * D2, r * d, Pc[e - r]);
  CMat U = nullspace(High);
  CMat Low(D2 * P_, d * P_);
  for (size_t e = 0; e < P_; ++e)
    for (size_t r = 0; r <= e; ++r)
      if (e - r <= P_) Low.set_block(e * D2, r * d, Pc[e - r]);
  CMat members = Low * U;
  if (U.cols() != perp_by_form || rank(members) != U.cols() ||
      !(adjoint(L) * Omega * members).is_zero() || dim_L + perp_by_form != D2 * P_)
    fail(Errc::InternalVerificationFailed, "orthogonal complement counts disagree");
  return {dim_L, perp_by_form};
}

}  // namespace kf
