#include "io.hpp"

#include <fstream>
#include <iterator>
#include <sstream>

#include "kf/error.hpp"

namespace kf::io {

namespace {

[[noreturn]] void schema(const std::string& at, const std::string& what) {
  fail(Errc::SchemaError, (at.empty() ? std::string("/") : at) + ": " + what);
}

const json& member(const json& j, const char* key, const std::string& at) {
  if (!j.is_object()) schema(at, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema(at, std::string("missing \"") + key + "\"");
  return *it;
}

const json& array_at(const json& j, const std::string& at) {
  if (!j.is_array()) schema(at, "expected an array");
  return j;
}

size_t count_at(const json& j, const std::string& at) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
    schema(at, "expected a nonnegative integer");
  return j.get<size_t>();
}

mpq_class rational_at(const json& j, const std::string& at) {
  if (!j.is_string()) schema(at, "expected a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    fail(e.code(), at + ": " + e.detail());
  }
}

}  // namespace

json to_json(const GaussianRational& x) {
  return json{{"re", rational_str(x.re())}, {"im", rational_str(x.im())}};
}

json to_json(const Poly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

json to_json(const MatPoly& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const CMat& m) {
  json rows = json::array();
  for (size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const BivariateKernel& k) {
  json blocks = json::array();
  for (size_t j = 0; j < k.p(); ++j) {
    json row = json::array();
    for (size_t t = 0; t < k.p(); ++t) row.push_back(to_json(k.block(j, t)));
    blocks.push_back(row);
  }
  return json{{"d", k.d()}, {"p", k.p()}, {"blocks", blocks}};
}

json to_json(const PontryaginSpace& s) {
  return json{{"d", s.d}, {"basis", to_json(s.basis)}, {"gram", to_json(s.gram)}};
}

json to_json(const LinearRelation& r) {
  json pairs = json::array();
  for (size_t c = 0; c < r.dim(); ++c) {
    json f = json::array(), g = json::array();
    for (size_t i = 0; i < r.n; ++i) {
      f.push_back(to_json(r.pairs(i, c)));
      g.push_back(to_json(r.pairs(r.n + i, c)));
    }
    pairs.push_back(json{{"f", f}, {"g", g}});
  }
  return json{{"n", r.n}, {"pairs", pairs}};
}

json to_json(const RatMat& r) {
  return json{{"num", to_json(r.num())}, {"den", to_json(r.den())}};
}

GaussianRational scalar_from(const json& j, const std::string& at) {
  if (!j.is_object()) schema(at, "expected a scalar object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "re" && it.key() != "im") schema(at, "unexpected key \"" + it.key() + "\"");
  mpq_class re = rational_at(member(j, "re", at), at + "/re");
  mpq_class im(0);
  if (j.contains("im")) im = rational_at(j["im"], at + "/im");
  return {re, im};
}

Poly poly_from(const json& j, const std::string& at) {
  std::vector<GaussianRational> c;
  const json& a = array_at(j, at);
  for (size_t k = 0; k < a.size(); ++k) c.push_back(scalar_from(a[k], at + "/" + std::to_string(k)));
  return Poly(std::move(c));
}

MatPoly matpoly_from(const json& j, const std::string& at) {
  const json& rows = array_at(j, at);
  if (rows.empty()) schema(at, "matrix has no rows");
  size_t cols = array_at(rows[0], at + "/0").size();
  MatPoly m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    std::string ai = at + "/" + std::to_string(i);
    const json& row = array_at(rows[i], ai);
    if (row.size() != cols) schema(ai, "ragged row");
    for (size_t k = 0; k < cols; ++k) m(i, k) = poly_from(row[k], ai + "/" + std::to_string(k));
  }
  return m;
}

CMat matrix_from(const json& j, const std::string& at) {
  const json& rows = array_at(j, at);
  size_t cols = rows.empty() ? 0 : array_at(rows[0], at + "/0").size();
  CMat m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    std::string ai = at + "/" + std::to_string(i);
    const json& row = array_at(rows[i], ai);
    if (row.size() != cols) schema(ai, "ragged row");
    for (size_t k = 0; k < cols; ++k) m(i, k) = scalar_from(row[k], ai + "/" + std::to_string(k));
  }
  return m;
}

BivariateKernel kernel_from(const json& j, const std::string& at) {
  size_t d = count_at(member(j, "d", at), at + "/d");
  size_t p = count_at(member(j, "p", at), at + "/p");
  const json& blocks = array_at(member(j, "blocks", at), at + "/blocks");
  if (blocks.size() != p) schema(at + "/blocks", "expected p rows of blocks");
  std::vector<std::vector<CMat>> grid(p);
  for (size_t r = 0; r < p; ++r) {
    std::string ar = at + "/blocks/" + std::to_string(r);
    const json& row = array_at(blocks[r], ar);
    if (row.size() != p) schema(ar, "expected p blocks");
    for (size_t c = 0; c < p; ++c) {
      std::string ac = ar + "/" + std::to_string(c);
      CMat m = matrix_from(row[c], ac);
      if (m.rows() != d || m.cols() != d) schema(ac, "block is not d x d");
      grid[r].push_back(m);
    }
  }
  for (size_t r = 0; r < p; ++r)
    for (size_t c = r; c < p; ++c)
      if (grid[r][c] != adjoint(grid[c][r]))
        schema(at + "/blocks/" + std::to_string(r) + "/" + std::to_string(c),
               "Hermitian violation: A_jk differs from A_kj^*");
  return BivariateKernel(d, std::move(grid));
}

PontryaginSpace space_from(const json& j, const std::string& at) {
  size_t d = count_at(member(j, "d", at), at + "/d");
  MatPoly B = matpoly_from(member(j, "basis", at), at + "/basis");
  if (B.rows() != d) schema(at + "/basis", "basis must have d rows");
  CMat G = matrix_from(member(j, "gram", at), at + "/gram");
  if (G.rows() != B.cols() || G.cols() != B.cols()) schema(at + "/gram", "gram must be n x n");
  return make_space(B, G);
}

LinearRelation relation_from(const json& j, const std::string& at) {
  const json& pairs = array_at(member(j, "pairs", at), at + "/pairs");
  size_t n = 0;
  if (j.contains("n")) n = count_at(j["n"], at + "/n");
  else if (!pairs.empty()) n = array_at(member(pairs[0], "f", at + "/pairs/0"), at + "/pairs/0/f").size();
  CMat span(2 * n, pairs.size());
  for (size_t c = 0; c < pairs.size(); ++c) {
    std::string ac = at + "/pairs/" + std::to_string(c);
    const json& f = array_at(member(pairs[c], "f", ac), ac + "/f");
    const json& g = array_at(member(pairs[c], "g", ac), ac + "/g");
    if (f.size() != n || g.size() != n) schema(ac, "f and g need n coordinates");
    for (size_t i = 0; i < n; ++i) {
      span(i, c) = scalar_from(f[i], ac + "/f/" + std::to_string(i));
      span(n + i, c) = scalar_from(g[i], ac + "/g/" + std::to_string(i));
    }
  }
  if (rank(span) != pairs.size()) schema(at + "/pairs", "pairs are linearly dependent");
  return make_relation(n, span);
}

MatPoly ProblemFile::matpoly() const {
  if (kind != "matpoly") schema("/kind", "expected kind matpoly, got " + kind);
  return matpoly_from(member(payload, "matrix", ""), "/matrix");
}

PontryaginSpace ProblemFile::space() const {
  if (kind != "space") schema("/kind", "expected kind space, got " + kind);
  return space_from(payload);
}

BivariateKernel ProblemFile::kernel() const {
  if (kind != "kernel") schema("/kind", "expected kind kernel, got " + kind);
  return kernel_from(payload);
}

NevanlinnaPair ProblemFile::pair() const {
  if (kind != "pair") schema("/kind", "expected kind pair, got " + kind);
  MatPoly M = matpoly_from(member(payload, "M", ""), "/M");
  MatPoly N = matpoly_from(member(payload, "N", ""), "/N");
  if (M.rows() != M.cols() || N.rows() != M.rows() || N.cols() != M.cols())
    schema("/", "M and N must both be d x d");
  return {M, N};
}

LinearRelation ProblemFile::relation() const {
  if (kind != "relation") schema("/kind", "expected kind relation, got " + kind);
  return relation_from(payload);
}

CMat ProblemFile::herm() const {
  if (kind != "herm") schema("/kind", "expected kind herm, got " + kind);
  CMat m = matrix_from(member(payload, "matrix", ""), "/matrix");
  if (!is_hermitian(m)) schema("/matrix", "matrix is not Hermitian");
  return m;
}

ProblemFile parse_problem(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    size_t line = 1, col = 1;
    for (size_t k = 0; k + 1 < e.byte && k < text.size(); ++k) {
      if (text[k] == '\n') ++line, col = 1;
      else ++col;
    }
    fail(Errc::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                               e.what());
  }
  const json& kind = member(j, "kind", "");
  if (!kind.is_string()) schema("/kind", "expected a string");
  std::string k = kind.get<std::string>();
  if (k != "matpoly" && k != "space" && k != "kernel" && k != "pair" && k != "relation" && k != "herm")
    schema("/kind", "unknown kind " + k);
  ProblemFile pf{k, j};
  try {
    if (k == "matpoly") pf.matpoly();
    else if (k == "space") pf.space();
    else if (k == "kernel") pf.kernel();
    else if (k == "pair") pf.pair();
    else if (k == "relation") pf.relation();
    else pf.herm();
  } catch (const Error& e) {
    if (e.code() == Errc::ParseError || e.code() == Errc::SchemaError) throw;
    fail(Errc::SchemaError, std::string("/: ") + errc_name(e.code()) + ": " + e.detail());
  }
  return pf;
}

ProblemFile parse_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open " + path);
  return parse_problem(in);
}

json problem_json(const std::string& kind, json payload) {
  json j = {{"kind", kind}};
  for (auto it = payload.begin(); it != payload.end(); ++it) j[it.key()] = it.value();
  return j;
}

}  // namespace kf::io
