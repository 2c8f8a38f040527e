#pragma once

#include <cctype>
#include <ostream>
#include <string>
#include <vector>

#include "io.hpp"
#include "kf/error.hpp"
#include "kf/matpoly.hpp"

namespace kf::test {

// Parses "3/2 + i z^2 - (1+i)z" into a Poly; juxtaposition multiplies.
class PolyParser {
 public:
  explicit PolyParser(std::string s) : s_(std::move(s)) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail(Errc::ParseError, "trailing input in " + s_);
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) return ++pos_, true;
    return false;
  }
  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'i' || c == 'z' || c == '(';
  }
  Poly expr() {
    Poly acc;
    bool neg = eat('-');
    if (!neg) eat('+');
    acc = neg ? -term() : term();
    for (;;) {
      if (eat('+')) acc = acc + term();
      else if (eat('-')) acc = acc - term();
      else return acc;
    }
  }
  Poly term() {
    Poly acc = factor();
    for (;;) {
      if (eat('*')) acc = acc * factor();
      else if (starts_factor()) acc = acc * factor();
      else return acc;
    }
  }
  Poly factor() {
    Poly base = atom();
    if (eat('^')) {
      int k = static_cast<int>(integer());
      Poly r(1);
      for (int t = 0; t < k; ++t) r = r * base;
      return r;
    }
    return base;
  }
  long integer() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail(Errc::ParseError, "expected a number in " + s_);
    return std::stol(s_.substr(start, pos_ - start));
  }
  Poly atom() {
    skip();
    if (eat('(')) {
      Poly p = expr();
      if (!eat(')')) fail(Errc::ParseError, "missing ) in " + s_);
      return p;
    }
    if (eat('i')) return Poly(GaussianRational::i());
    if (eat('z')) return Poly::z();
    long num = integer();
    if (eat('/')) return Poly(GaussianRational::make(num, integer()));
    return Poly(GaussianRational::make(num, 1));
  }

  std::string s_;
  size_t pos_ = 0;
};

inline Poly P(const std::string& s) { return PolyParser(s).parse(); }

inline GaussianRational S(const std::string& s) {
  Poly p = P(s);
  if (p.degree() > 0) fail(Errc::ParseError, "not a scalar: " + s);
  return p.coeff(0);
}

inline MatPoly M(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Poly>> r;
  for (const auto& row : rows) {
    r.emplace_back();
    for (const auto& e : row) r.back().push_back(P(e));
  }
  return MatPoly::from_rows(r);
}

inline CMat C(const std::vector<std::vector<std::string>>& rows) {
  CMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < rows[i].size(); ++j) m(i, j) = S(rows[i][j]);
  return m;
}

inline std::string fixture(const std::string& name) { return std::string(KF_FIXTURE_DIR) + "/" + name; }

inline io::ProblemFile load(const std::string& name) { return io::parse_problem_file(fixture(name)); }

}  // namespace kf::test

namespace kf {

inline void PrintTo(const GaussianRational& x, std::ostream* os) { *os << x.str(); }
inline void PrintTo(const Poly& p, std::ostream* os) { *os << p.str(); }
inline void PrintTo(const MatPoly& m, std::ostream* os) { *os << io::to_json(m).dump(); }
inline void PrintTo(const CMat& m, std::ostream* os) { *os << io::to_json(m).dump(); }
inline void PrintTo(const RatMat& r, std::ostream* os) { *os << io::to_json(r).dump(); }
inline void PrintTo(const BivariateKernel& k, std::ostream* os) { *os << io::to_json(k).dump(); }
inline void PrintTo(const Inertia& i, std::ostream* os) {
  *os << "(" << i.plus << ", " << i.minus << ", " << i.zero << ")";
}

}  // namespace kf

#define EXPECT_KF_ERROR(stmt, errc)                                  \
  do {                                                               \
    try {                                                            \
      stmt;                                                          \
      ADD_FAILURE() << "expected " << ::kf::errc_name(errc);         \
    } catch (const ::kf::Error& e) {                                 \
      EXPECT_EQ(e.code(), errc) << e.what();                         \
    }                                                                \
  } while (0)
