#include "props.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "gen.hpp"
#include "kf/canonical.hpp"
#include "kf/error.hpp"
#include "kf/hermitian.hpp"
#include "kf/pairsynth.hpp"
#include "kf/smith.hpp"
#include "kf/space.hpp"
#include "oracles.hpp"

namespace kf::props {

namespace {

using gen::Gen;
using Check = std::optional<std::string>;
using Trial = std::function<Check(Gen&)>;

#define EXPECT_OR_RETURN(cond, msg) \
  if (!(cond)) return std::string(msg)

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  os << "{";
  for (size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << "}";
  return os.str();
}

std::vector<int> sorted_desc(std::vector<int> v) {
  std::sort(v.rbegin(), v.rend());
  return v;
}

Poly monic_or_zero(const Poly& p) { return p.is_zero() ? p : p.monic(); }

// Full row rank at every point: U [I 0] V with unimodular U, V.
MatPoly full_row_rank(Gen& g, size_t d, size_t cols) {
  MatPoly E(d, cols);
  E.set_block(0, 0, MatPoly::identity(d));
  return g.unimodular(d, 1, 2) * E * g.unimodular(cols, 1, 3);
}

Check smith_trial(Gen& g) {
  size_t r = g.integer(1, 3), c = g.integer(1, 3);
  MatPoly B;
  do {
    B = g.matpoly(r, c, 3);
    if (r >= 2 && g.coin(0.25)) B.set_block(r - 1, 0, B.row(0) * g.poly(1));
  } while (B.is_zero());
  SmithForm sf = smith(B);
  EXPECT_OR_RETURN(sf.U * sf.middle(r, c) * sf.V == B, "reconstruction U D V != B");
  EXPECT_OR_RETURN(sf.U * sf.U_inv == MatPoly::identity(r), "U_inv is not the inverse of U");
  EXPECT_OR_RETURN(sf.V * sf.V_inv == MatPoly::identity(c), "V_inv is not the inverse of V");
  EXPECT_OR_RETURN(is_unimodular(sf.U) && is_unimodular(sf.V), "transformer is not unimodular");
  for (size_t k = 0; k + 1 < sf.factors.size(); ++k)
    EXPECT_OR_RETURN(divmod(sf.factors[k], sf.factors[k + 1]).second.is_zero(),
                     "divisibility chain broken at " + std::to_string(k));
  for (size_t k = 1; k <= std::min(r, c); ++k) {
    Poly want;
    if (k <= sf.l) {
      want = Poly(1);
      for (size_t t = 0; t < k; ++t) want = want * sf.factors[sf.l - 1 - t];
      want = want.monic();
    }
    EXPECT_OR_RETURN(monic_or_zero(oracle::minors_gcd(B, k)) == want,
                     "gcd of " + std::to_string(k) + "-minors disagrees with the invariant factors");
  }
  SmithForm other = smith(B * MatPoly::constant(g.invertible(c)));
  EXPECT_OR_RETURN(other.factors == sf.factors, "factors change under a constant column change");
  return std::nullopt;
}

Check rowreduce_trial(Gen& g) {
  size_t d = g.integer(1, 3), cols = g.integer(static_cast<int>(d), 4);
  MatPoly P = full_row_rank(g, d, cols);
  RowReducedForm rr = row_reduce(P);
  EXPECT_OR_RETURN(rr.U * P == rr.S, "S != U P");
  EXPECT_OR_RETURN(is_unimodular(rr.U), "U is not unimodular");
  RowData rd = row_data(rr.S);
  EXPECT_OR_RETURN(rd.sigma == rr.sigma, "reported row degrees differ from S");
  EXPECT_OR_RETURN(rank(rr.S_inf) == d, "leading row coefficient matrix is rank deficient");
  int ext = 0;
  for (int s : rr.sigma) ext += s;
  EXPECT_OR_RETURN(ext == internal_degree(rr.S), "external degree != internal degree");
  MatPoly u(d, 1);
  for (size_t i = 0; i < d; ++i)
    if (g.coin(0.8)) u(i, 0) = g.poly(2);
  if (!u.is_zero()) {
    int want = Poly::kMinusInf;
    for (size_t i = 0; i < d; ++i)
      if (!u(i, 0).is_zero()) want = std::max(want, rr.sigma[i] + u(i, 0).degree());
    EXPECT_OR_RETURN((para_conjugate(rr.S) * u).degree() == want, "predictable degree property fails");
  }
  MatPoly V = g.unimodular(d, 1, 3);
  int other = 0;
  for (int s : row_data(V * P).sigma) other += s;
  EXPECT_OR_RETURN(ext <= other, "a unimodular multiple has smaller external degree");
  std::vector<int> f = forney_indices(P);
  EXPECT_OR_RETURN(f == sorted_desc(rr.sigma), "Forney indices differ from the row degrees");
  EXPECT_OR_RETURN(forney_indices(V * P) == f, "Forney indices change under a unimodular factor");
  return std::nullopt;
}

Check inertia_trial(Gen& g) {
  size_t n = g.integer(1, 6);
  std::vector<int> signs = g.signs(n, true);
  Inertia want;
  for (int s : signs) (s > 0 ? want.plus : s < 0 ? want.minus : want.zero)++;
  CMat H = g.hermitian(signs);
  EXPECT_OR_RETURN(inertia(H) == want, "inertia disagrees with the construction");
  EXPECT_OR_RETURN(oracle::descartes_inertia(H) == want, "inertia disagrees with the sign-variation oracle");
  CMat X = g.invertible(n);
  EXPECT_OR_RETURN(inertia(X * H * adjoint(X)) == want, "inertia changes under congruence");
  return std::nullopt;
}

Check doubling_trial(Gen& g) {
  size_t d = g.integer(1, 2), n = g.integer(1, 3);
  MatPoly B;
  do {
    B = g.matpoly(d, n, 2);
  } while (rank(coeff_stack(B, std::max(B.degree(), 0) + 1)) != n);
  PontryaginSpace s = make_space(B, g.hermitian_invertible(n));
  BivariateKernel K = reproducing_kernel(s);
  Inertia in = negative_squares(K);
  size_t r = in.plus + in.minus;
  EXPECT_OR_RETURN(r == n, "kernel stack rank differs from the space dimension");
  for (size_t q = K.p(); q <= K.p() + 2; ++q) {
    Inertia dbl = doubled_kernel_indices(K, q);
    EXPECT_OR_RETURN(dbl.plus == r && dbl.minus == r,
                     "doubled kernel at q=" + std::to_string(q) + " has indices (" +
                         std::to_string(dbl.plus) + "," + std::to_string(dbl.minus) + "), rank " +
                         std::to_string(r));
  }
  return std::nullopt;
}

Check canonical_trial(Gen& g) {
  size_t d = g.integer(1, 3);
  std::vector<int> deg;
  do {
    deg = g.degrees(d, 3);
  } while (deg[0] == 0);
  MatPoly P = canonical_basis(deg);
  MatPoly W = g.unimodular(d, 1, 3);
  CMat T = g.invertible(P.cols());
  MatPoly B = W * P * MatPoly::constant(T);
  CanonicalDecomposition dec = decompose(B);
  EXPECT_OR_RETURN(dec.degrees == deg, "degrees " + join(dec.degrees) + " != " + join(deg));
  EXPECT_OR_RETURN(dec.W * canonical_basis(dec.degrees) * MatPoly::constant(dec.T) == B,
                   "W P T does not reproduce B");
  EXPECT_OR_RETURN(is_unimodular(dec.W), "W is not unimodular");
  for (size_t j = 0; j < B.cols(); ++j)
    EXPECT_OR_RETURN(membership(dec, B.col(j)), "a basis column is not a member");
  EXPECT_OR_RETURN(!membership(dec, W.col(0).shift(deg[0])), "an element outside the span is a member");
  return std::nullopt;
}

struct PairSpace {
  NevanlinnaPair pair;
  BivariateKernel K;
  PontryaginSpace s;
};

PairSpace pair_space(Gen& g, bool full) {
  size_t d = g.integer(1, 3);
  NevanlinnaPair pr = g.pair(d, g.integer(1, 2), full);
  BivariateKernel K = kernel_of_pair(pr);
  return {pr, K, kernel_factor(K)};
}

Check synth_trial(Gen& g) {
  PairSpace ps = pair_space(g, g.coin());
  AnalysisReport rep = analyze(ps.s);
  EXPECT_OR_RETURN(rep.is_nevanlinna, "space of a pair kernel is not classified Nevanlinna");
  NevanlinnaForm form = synthesize(ps.s);
  FormCheck fc = verify_form(form, ps.K);
  EXPECT_OR_RETURN(fc.ok, "synthesized form does not verify: " + fc.reason);
  std::vector<int> f = forney_indices(form.P), mus = sorted_desc(degree_filtration(ps.s).mus);
  EXPECT_OR_RETURN(f == mus, "Forney indices " + join(f) + " != degree filtration " + join(mus));
  return std::nullopt;
}

Check lagrange_trial(Gen& g) {
  PairSpace ps = pair_space(g, true);
  EXPECT_OR_RETURN(analyze(ps.s).is_full, "space of a full pair is not full");
  NevanlinnaForm form = synthesize(ps.s);
  RowReducedForm rr = row_reduce(form.P);
  LagrangeDims ld = lagrange_dims(rr.S, form.Q);
  size_t d = ps.s.d;
  int p = *std::max_element(rr.sigma.begin(), rr.sigma.end()), total = 0;
  for (int s : rr.sigma) total += s;
  size_t want = d * static_cast<size_t>(p) - static_cast<size_t>(total);
  EXPECT_OR_RETURN(ld.dim_perp == want, "dim of the orthogonal complement is " +
                                            std::to_string(ld.dim_perp) + ", expected " +
                                            std::to_string(want));
  EXPECT_OR_RETURN(ld.dim_L == d * static_cast<size_t>(p) + static_cast<size_t>(total),
                   "dim of the spanned subspace is off");
  return std::nullopt;
}

Check junitary_trial(Gen& g) {
  size_t d = g.integer(1, 3);
  NevanlinnaPair pr = g.pair(d, g.integer(1, 2));
  CMat U = g.j_unitary(d);
  EXPECT_OR_RETURN(kernel_of_pair(j_unitary_transform(pr, U)) == kernel_of_pair(pr),
                   "J-unitary transform changed the kernel");
  CMat bad = U;
  bad(0, 0) = bad(0, 0) + GaussianRational(1);
  CMat J = j_matrix(d);
  if (bad * J * adjoint(bad) != J) {
    try {
      j_unitary_transform(pr, bad);
      return std::string("non-J-unitary matrix accepted");
    } catch (const Error& e) {
      EXPECT_OR_RETURN(e.code() == Errc::NotJUnitary, "wrong error for a non-J-unitary matrix");
    }
  }
  return std::nullopt;
}

const std::map<std::string, Trial>& registry() {
  static const std::map<std::string, Trial> r = {
      {"smith", smith_trial},         {"rowreduce", rowreduce_trial}, {"inertia", inertia_trial},
      {"doubling", doubling_trial},   {"canonical", canonical_trial}, {"synth", synth_trial},
      {"lagrange", lagrange_trial},   {"junitary", junitary_trial},
  };
  return r;
}

uint64_t trial_seed(uint64_t seed, size_t t) {
  uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (t + 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"smith",     "rowreduce", "inertia", "doubling",
                                                 "canonical", "synth",     "lagrange", "junitary"};
  return names;
}

uint64_t default_seed() {
  if (const char* env = std::getenv("KF_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return kDefaultSeed;
}

SuiteReport run_suite(const std::string& name, uint64_t seed, size_t trials) {
  auto it = registry().find(name);
  if (it == registry().end()) fail(Errc::PreconditionViolated, "unknown suite " + name);
  SuiteReport rep;
  rep.suite = name;
  rep.seed = seed;
  rep.trials = trials;
  auto start = std::chrono::steady_clock::now();
  for (size_t t = 0; t < trials; ++t) {
    uint64_t ts = trial_seed(seed, t);
    Gen g(ts);
    Check c;
    try {
      c = it->second(g);
    } catch (const Error& e) {
      c = std::string(errc_name(e.code())) + ": " + e.detail();
    }
    if (c) rep.failures.push_back({t, ts, *c});
    else ++rep.passed;
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace kf::props
