#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

#include "io.hpp"
#include "kf/canonical.hpp"
#include "kf/hermitian.hpp"
#include "kf/pairsynth.hpp"
#include "kf/qfunction.hpp"
#include "kf/smith.hpp"
#include "kf/space.hpp"
#include "props.hpp"

namespace kf::cli {

namespace {

using io::json;
using io::to_json;

struct Report {
  json data = json::object();
  std::ostringstream text;
  int exit_code = 0;
};

using Grid = std::vector<std::vector<std::string>>;

void put_grid(std::ostream& os, const std::string& name, const Grid& g) {
  os << name << " =\n";
  if (g.empty() || g[0].empty()) {
    os << "  [] (" << g.size() << " x 0)\n";
    return;
  }
  std::vector<size_t> w(g[0].size(), 0);
  for (const auto& row : g)
    for (size_t j = 0; j < row.size(); ++j) w[j] = std::max(w[j], row[j].size());
  for (const auto& row : g) {
    os << "  [ ";
    for (size_t j = 0; j < row.size(); ++j) os << std::left << std::setw(static_cast<int>(w[j])) << row[j] << (j + 1 < row.size() ? "  " : " ");
    os << "]\n";
  }
}

void put(std::ostream& os, const std::string& name, const MatPoly& m) {
  Grid g(m.rows(), std::vector<std::string>(m.cols()));
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) g[i][j] = m(i, j).str();
  put_grid(os, name, g);
}

void put(std::ostream& os, const std::string& name, const CMat& m) {
  Grid g(m.rows(), std::vector<std::string>(m.cols()));
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) g[i][j] = m(i, j).str();
  put_grid(os, name, g);
}

void put(std::ostream& os, const std::string& name, const RatMat& m) {
  Grid g(m.rows(), std::vector<std::string>(m.cols()));
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) g[i][j] = m(i, j).str();
  put_grid(os, name, g);
}

void put(std::ostream& os, const std::string& name, const BivariateKernel& k) {
  os << "kernel d = " << k.d() << ", p = " << k.p() << "\n";
  for (size_t a = 0; a < k.p(); ++a)
    for (size_t b = 0; b < k.p(); ++b) {
      const CMat& blk = k.block(a, b);
      if (!blk.is_zero()) put(os, name + "[z^" + std::to_string(a) + " w*^" + std::to_string(b) + "]", blk);
    }
}

std::string list(const std::vector<int>& v) {
  std::ostringstream os;
  os << "{";
  for (size_t k = 0; k < v.size(); ++k) os << (k ? ", " : "") << v[k];
  os << "}";
  return os.str();
}

std::string yes(bool b) { return b ? "true" : "false"; }

GaussianRational parse_mu(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) fail(Errc::ParseError, "--mu expects RE,IM");
  return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

PontryaginSpace load_space(const io::ProblemFile& pf) {
  if (pf.kind == "kernel") return kernel_factor(pf.kernel());
  return pf.space();
}

MatPoly load_matpoly(const io::ProblemFile& pf) {
  if (pf.kind == "pair") return hcat(pf.pair().M, pf.pair().N);
  return pf.matpoly();
}

void cmd_smith(const std::string& file, Report& r) {
  MatPoly B = load_matpoly(io::parse_problem_file(file));
  SmithForm sf = smith(B);
  json factors = json::array();
  for (const auto& f : sf.factors) factors.push_back(to_json(f));
  r.data = {{"U", to_json(sf.U)}, {"V", to_json(sf.V)}, {"factors", factors}, {"l", sf.l}};
  r.text << "l = " << sf.l << "\nfactors:";
  for (const auto& f : sf.factors) r.text << "  " << f.str();
  r.text << "\n";
  put(r.text, "U", sf.U);
  put(r.text, "V", sf.V);
}

void cmd_rowreduce(const std::string& file, Report& r) {
  MatPoly P = load_matpoly(io::parse_problem_file(file));
  RowReducedForm rr = row_reduce(P);
  r.data = {{"U", to_json(rr.U)}, {"S", to_json(rr.S)}, {"sigma", rr.sigma}, {"S_inf", to_json(rr.S_inf)}};
  r.text << "sigma = " << list(rr.sigma) << "\n";
  put(r.text, "U", rr.U);
  put(r.text, "S", rr.S);
  put(r.text, "S_inf", rr.S_inf);
}

void cmd_forney(const std::string& file, Report& r) {
  MatPoly P = load_matpoly(io::parse_problem_file(file));
  std::vector<int> f = forney_indices(P);
  r.data = {{"forney", f}};
  r.text << "forney = " << list(f) << "\n";
}

void cmd_analyze(const std::string& file, Report& r) {
  PontryaginSpace s = load_space(io::parse_problem_file(file));
  AnalysisReport a = analyze(s);
  json cond_b = {{"kind", range_kind_name(a.cond_b.kind)}, {"excluded", to_json(a.cond_b.excluded)}};
  if (a.cond_b.kind != RangeKind::FailsEverywhere) cond_b["witness"] = to_json(a.cond_b.witness);
  r.data = {{"cond_a", a.cond_a},
            {"cond_b", cond_b},
            {"defect", a.defect ? json(*a.defect) : json(nullptr)},
            {"smith_rank", a.smith_rank},
            {"dom_dim", a.dom_dim},
            {"n", a.n},
            {"plus", a.plus},
            {"minus", a.minus},
            {"degrees", a.degrees},
            {"is_nevanlinna", a.is_nevanlinna},
            {"is_full", a.is_full}};
  auto& t = r.text;
  t << "cond_a         " << yes(a.cond_a) << "\n";
  t << "cond_b         " << range_kind_name(a.cond_b.kind);
  if (a.cond_b.kind != RangeKind::FailsEverywhere) t << " (witness " << a.cond_b.witness.str() << ")";
  t << "\n";
  t << "excluded       " << a.cond_b.excluded.str() << "\n";
  t << "defect         " << (a.defect ? std::to_string(*a.defect) : std::string("none")) << "\n";
  t << "smith_rank     " << a.smith_rank << "\n";
  t << "dom_dim        " << a.dom_dim << "\n";
  t << "n              " << a.n << "\n";
  t << "plus           " << a.plus << "\n";
  t << "minus          " << a.minus << "\n";
  t << "degrees        " << list(a.degrees) << "\n";
  t << "is_nevanlinna  " << yes(a.is_nevanlinna) << "\n";
  t << "is_full        " << yes(a.is_full) << "\n";
  r.exit_code = a.is_nevanlinna ? 0 : 1;
}

void cmd_decompose(const std::string& file, bool check, Report& r) {
  auto pf = io::parse_problem_file(file);
  MatPoly B = pf.kind == "matpoly" ? pf.matpoly() : load_space(pf).basis;
  CanonicalDecomposition dec = decompose(B);
  r.data = {{"W", to_json(dec.W)}, {"degrees", dec.degrees}, {"T", to_json(dec.T)}, {"unimodular", dec.unimodular}};
  if (check) {
    bool ok = dec.W * canonical_basis(dec.degrees) * MatPoly::constant(dec.T) == B &&
              (dec.unimodular ? is_unimodular(dec.W) : !det(dec.W).is_zero()) && rank(dec.T) == dec.T.rows();
    if (!ok) fail(Errc::InternalVerificationFailed, "W P T does not reproduce the basis");
    r.data["checked"] = true;
  }
  r.text << "degrees = " << list(dec.degrees) << "\nunimodular = " << yes(dec.unimodular) << "\n";
  if (check) r.text << "checked = true\n";
  put(r.text, "W", dec.W);
  put(r.text, "T", dec.T);
}

void cmd_kernel(const std::string& file, Report& r) {
  BivariateKernel K = reproducing_kernel(io::parse_problem_file(file).space());
  r.data = io::problem_json("kernel", to_json(K));
  put(r.text, "K", K);
}

void cmd_negsq(const std::string& file, Report& r) {
  auto pf = io::parse_problem_file(file);
  Inertia in;
  if (pf.kind == "herm") in = inertia(pf.herm());
  else if (pf.kind == "kernel") in = negative_squares(pf.kernel());
  else in = negative_squares(reproducing_kernel(pf.space()));
  r.data = {{"plus", in.plus}, {"minus", in.minus}, {"zero", in.zero}, {"rank", in.plus + in.minus}};
  r.text << "plus   " << in.plus << "\nminus  " << in.minus << "\nzero   " << in.zero << "\nrank   "
         << in.plus + in.minus << "\n";
}

void cmd_synth(const std::string& file, bool want_pair, Report& r) {
  PontryaginSpace s = load_space(io::parse_problem_file(file));
  NevanlinnaForm form = synthesize(s);
  std::vector<int> f = forney_indices(form.P);
  r.data = {{"P", to_json(form.P)}, {"Q", to_json(form.Q)}, {"full", form.full}, {"forney", f}};
  r.text << "full = " << yes(form.full) << "\nforney = " << list(f) << "\n";
  put(r.text, "P", form.P);
  put(r.text, "Q", form.Q);
  if (!want_pair) return;
  Extraction ex = extract_pair(form);
  if (ex.pair) {
    r.data["pair"] = {{"M", to_json(ex.pair->M)}, {"N", to_json(ex.pair->N)}};
    put(r.text, "M", ex.pair->M);
    put(r.text, "N", ex.pair->N);
  } else {
    r.data["pair"] = nullptr;
    r.data["declined"] = {{"code", "NotExtractable"}, {"ratio", rational_str(ex.ratio)}, {"reason", ex.reason}};
    r.text << "pair declined (NotExtractable): " << ex.reason << "\n";
    r.exit_code = 1;
  }
}

void cmd_pair(const std::string& file, const std::string& ext, const std::string& mu_text,
              const std::string& gamma_file, const std::string& q0_file, Report& r) {
  PontryaginSpace s = load_space(io::parse_problem_file(file));
  if (!analyze(s).is_nevanlinna) fail(Errc::NotNevanlinna, "space fails the Nevanlinna criterion");
  LinearRelation A = ext.empty() ? operator_extension(s) : io::parse_problem_file(ext).relation();
  if (A.n != s.n) fail(Errc::ShapeMismatch, "extension lives in a space of another dimension");
  if (!is_selfadjoint_extension(s, A))
    fail(Errc::PreconditionViolated, "relation is not a self-adjoint extension with nonempty resolvent set");
  GaussianRational mu = mu_text.empty() ? default_mu(s, A) : parse_mu(mu_text);
  CMat gamma = defect_basis(s, mu);
  if (!gamma_file.empty()) {
    MatPoly g = io::parse_problem_file(gamma_file).matpoly();
    if (!g.is_constant()) fail(Errc::SchemaError, "/matrix: gamma must be constant");
    gamma = g.coeff(0);
  }
  CMat q0(gamma.cols(), gamma.cols());
  if (!q0_file.empty()) q0 = io::parse_problem_file(q0_file).herm();
  CanonicalDecomposition dec = decompose(s);
  QFunctionResult q = q_function(s, A, mu, gamma, q0);
  NevanlinnaPair pr = pair_from_q(s, dec, A, mu, gamma, q0);
  r.data = {{"M", to_json(pr.M)},
            {"N", to_json(pr.N)},
            {"mu", to_json(mu)},
            {"extension", ext.empty() ? "default" : "supplied"},
            {"Q", to_json(q.Q)},
            {"verified", true}};
  r.text << "mu = " << mu.str() << (mu_text.empty() ? " (default)" : "") << "\n";
  r.text << "extension = " << (ext.empty() ? "default" : "supplied") << "\n";
  put(r.text, "Q", q.Q);
  put(r.text, "M", pr.M);
  put(r.text, "N", pr.N);
  r.text << "verified = true\n";
}

NevanlinnaPair load_pair(const std::string& m, const std::string& n) {
  MatPoly M = io::parse_problem_file(m).matpoly();
  MatPoly N = io::parse_problem_file(n).matpoly();
  if (M.rows() != M.cols() || N.rows() != M.rows() || N.cols() != M.cols())
    fail(Errc::ShapeMismatch, "M and N must both be d x d");
  return {M, N};
}

void cmd_verify_pair(const std::string& k, const std::string& m, const std::string& n, Report& r) {
  BivariateKernel K = io::parse_problem_file(k).kernel();
  NevanlinnaPair pr = load_pair(m, n);
  bool ok = false;
  std::string reason;
  try {
    ok = kernel_of_pair(pr) == K;
    reason = ok ? "kernel matches" : "kernel of the pair differs";
  } catch (const Error& e) {
    if (e.code() != Errc::NotANevanlinnaPair) throw;
    reason = e.what();
  }
  r.data = {{"verified", ok}, {"reason", reason}};
  r.text << "verified = " << yes(ok) << "\nreason = " << reason << "\n";
  r.exit_code = ok ? 0 : 1;
}

void cmd_pair_kernel(const std::string& m, const std::string& n, Report& r) {
  BivariateKernel K = kernel_of_pair(load_pair(m, n));
  r.data = io::problem_json("kernel", to_json(K));
  put(r.text, "K", K);
}

void cmd_propcheck(const std::string& suite, std::optional<uint64_t> seed, size_t trials, Report& r) {
  std::vector<std::string> suites = suite == "all" ? props::suite_names() : std::vector<std::string>{suite};
  uint64_t s = seed ? *seed : props::default_seed();
  json results = json::array();
  bool all_ok = true;
  for (const auto& name : suites) {
    props::SuiteReport rep = props::run_suite(name, s, trials);
    json failures = json::array();
    for (const auto& f : rep.failures)
      failures.push_back({{"trial", f.trial}, {"seed", f.seed}, {"what", f.what}});
    results.push_back({{"suite", name},
                       {"seed", s},
                       {"trials", rep.trials},
                       {"passed", rep.passed},
                       {"failed", rep.failures.size()},
                       {"seconds", rep.seconds},
                       {"failures", failures}});
    r.text << std::left << std::setw(10) << name << " " << rep.passed << "/" << rep.trials << " passed  seed "
           << s << "  " << std::fixed << std::setprecision(2) << rep.seconds << "s\n";
    for (const auto& f : rep.failures) r.text << "  trial " << f.trial << " (seed " << f.seed << "): " << f.what << "\n";
    all_ok = all_ok && rep.ok();
  }
  r.data = {{"suites", results}, {"ok", all_ok}};
  r.exit_code = all_ok ? 0 : 1;
}

json error_json(const std::string& code, const std::string& msg) {
  return {{"error", {{"code", code}, {"message", msg}}}};
}

}  // namespace

int exit_code_for(Errc c) {
  switch (c) {
    case Errc::RangeConditionFails:
    case Errc::NotNevanlinna:
    case Errc::NotANevanlinnaPair:
    case Errc::PolynomialityFailed:
    case Errc::InternalVerificationFailed:
      return 1;
    default:
      return 2;
  }
}

RunResult run(const std::vector<std::string>& args) {
  CLI::App app{"Exact analysis of polynomial reproducing kernel Pontryagin spaces", "kf"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  std::string file, ext, mu, gamma, q0, kfile, mfile, nfile, suite;
  bool check = false, want_pair = false;
  std::optional<uint64_t> seed;
  size_t trials = props::kDefaultTrials;

  auto file_cmd = [&](const char* name, const char* help) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("file", file, "Problem file")->required();
    return c;
  };
  auto* smith_c = file_cmd("smith", "Smith form U, invariant factors, V");
  auto* rowreduce_c = file_cmd("rowreduce", "Row-reduced form U P with row degrees");
  auto* forney_c = file_cmd("forney", "Forney indices");
  auto* analyze_c = file_cmd("analyze", "Nevanlinna criterion report for a space");
  auto* decompose_c = file_cmd("decompose", "Canonical decomposition B = W P T");
  decompose_c->add_flag("--check", check, "Re-verify W P T = B");
  auto* kernel_c = file_cmd("kernel", "Reproducing kernel of a space");
  auto* negsq_c = file_cmd("negsq", "Inertia of a kernel, space or Hermitian matrix");
  auto* synth_c = file_cmd("synth", "Nevanlinna form P, Q");
  synth_c->add_flag("--pair", want_pair, "Also extract a pair M, N");
  auto* pair_c = file_cmd("pair", "Pair M, N through the Q-function route");
  pair_c->add_option("--extension", ext, "Self-adjoint extension (relation file)");
  pair_c->add_option("--mu", mu, "Non-real point RE,IM");
  pair_c->add_option("--gamma", gamma, "Defect basis at mu (matpoly file, constant)");
  pair_c->add_option("--q0", q0, "Hermitian Q0 (herm file)");
  auto* verify_c = app.add_subcommand("verify-pair", "Check that M, N have kernel K");
  verify_c->add_option("--kernel", kfile, "Kernel file")->required();
  verify_c->add_option("--m", mfile, "M (matpoly file)")->required();
  verify_c->add_option("--n", nfile, "N (matpoly file)")->required();
  auto* pk_c = app.add_subcommand("pair-kernel", "Kernel of a pair");
  pk_c->add_option("--m", mfile, "M (matpoly file)")->required();
  pk_c->add_option("--n", nfile, "N (matpoly file)")->required();
  auto* prop_c = app.add_subcommand("propcheck", "Seeded property suites");
  prop_c->add_option("suite", suite, "Suite name or all")->required();
  prop_c->add_option("--seed", seed, "Seed (default KF_SEED or built-in)");
  prop_c->add_option("--trials", trials, "Trials per suite");

  RunResult res;
  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    res.out = app.help();
    return res;
  } catch (const CLI::ParseError& e) {
    res.exit_code = 2;
    res.err = error_json("UsageError", e.what()).dump() + "\n";
    return res;
  }

  Report r;
  try {
    if (smith_c->parsed()) cmd_smith(file, r);
    else if (rowreduce_c->parsed()) cmd_rowreduce(file, r);
    else if (forney_c->parsed()) cmd_forney(file, r);
    else if (analyze_c->parsed()) cmd_analyze(file, r);
    else if (decompose_c->parsed()) cmd_decompose(file, check, r);
    else if (kernel_c->parsed()) cmd_kernel(file, r);
    else if (negsq_c->parsed()) cmd_negsq(file, r);
    else if (synth_c->parsed()) cmd_synth(file, want_pair, r);
    else if (pair_c->parsed()) cmd_pair(file, ext, mu, gamma, q0, r);
    else if (verify_c->parsed()) cmd_verify_pair(kfile, mfile, nfile, r);
    else if (pk_c->parsed()) cmd_pair_kernel(mfile, nfile, r);
    else if (prop_c->parsed()) cmd_propcheck(suite, seed, trials, r);
  } catch (const Error& e) {
    res.exit_code = exit_code_for(e.code());
    res.err = error_json(errc_name(e.code()), e.detail()).dump() + "\n";
    return res;
  }
  res.exit_code = r.exit_code;
  res.out = as_json ? r.data.dump(2) + "\n" : r.text.str();
  return res;
}

}  // namespace kf::cli
