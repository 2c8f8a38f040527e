#include "kf/poly.hpp"

#include "kf/error.hpp"

namespace kf {

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(const GaussianRational& c, int k) {
  if (c.is_zero()) return {};
  std::vector<GaussianRational> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

GaussianRational Poly::operator()(const GaussianRational& x) const {
  GaussianRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Poly Poly::conj() const {
  Poly p = *this;
  for (auto& x : p.c_) x = x.conj();
  return p;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly p = *this;
  GaussianRational inv = lead().inv();
  for (auto& x : p.c_) x *= inv;
  return p;
}

Poly Poly::shift(int k) const {
  if (is_zero() || k == 0) return *this;
  Poly p;
  p.c_.assign(k, GaussianRational());
  p.c_.insert(p.c_.end(), c_.begin(), c_.end());
  return p;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& x : p.c_) x = -x;
  return p;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<GaussianRational> r(c_.size() + o.c_.size() - 1);
  for (size_t a = 0; a < c_.size(); ++a) {
    if (c_[a].is_zero()) continue;
    for (size_t b = 0; b < o.c_.size(); ++b)
      if (!o.c_[b].is_zero()) r[a + b] += c_[a] * o.c_[b];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const GaussianRational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

namespace {

// Coefficient text for a nonconstant term: "" for 1, "-" for -1.
std::string coeff_text(const GaussianRational& c, bool first, bool constant_term) {
  std::string body;
  bool neg = false;
  if (c.is_real()) {
    neg = sgn(c.re()) < 0;
    mpq_class a = abs(c.re());
    body = (a == 1 && !constant_term) ? "" : rational_str(a);
  } else if (sgn(c.re()) == 0) {
    neg = sgn(c.im()) < 0;
    mpq_class a = abs(c.im());
    body = (a == 1 ? std::string() : rational_str(a)) + "i";
  } else {
    body = "(" + c.str() + ")";
  }
  std::string out;
  if (first) out = neg ? "-" : "";
  else out = neg ? " - " : " + ";
  return out + body;
}

}  // namespace

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const auto& c = c_[k];
    if (c.is_zero()) continue;
    s += coeff_text(c, first, k == 0);
    if (k >= 1) s += var;
    if (k >= 2) s += "^" + std::to_string(k);
    first = false;
  }
  return s;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<GaussianRational> r = a.coeffs();
  std::vector<GaussianRational> q(a.degree() - b.degree() + 1);
  GaussianRational inv = b.lead().inv();
  const auto& bc = b.coeffs();
  for (int k = a.degree(); k >= b.degree(); --k) {
    if (r[k].is_zero()) continue;
    GaussianRational f = r[k] * inv;
    q[k - b.degree()] = f;
    for (int t = 0; t <= b.degree(); ++t)
      if (!bc[t].is_zero()) r[k - b.degree() + t] -= f * bc[t];
  }
  r.resize(b.degree());
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) fail(Errc::NotDivisible, "polynomial not divisible");
  return q;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return (exact_div(a, gcd(a, b)) * b).monic();
}

RatFunc::RatFunc(Poly num, Poly den) {
  if (den.is_zero()) fail(Errc::DivisionByZero, "zero denominator");
  if (num.is_zero()) {
    den_ = Poly(1);
    return;
  }
  Poly g = gcd(num, den);
  if (g.degree() > 0) {
    num = exact_div(num, g);
    den = exact_div(den, g);
  }
  GaussianRational inv = den.lead().inv();
  num *= inv;
  den *= inv;
  num_ = std::move(num);
  den_ = std::move(den);
}

GaussianRational RatFunc::operator()(const GaussianRational& x) const {
  GaussianRational d = den_(x);
  if (d.is_zero()) fail(Errc::DivisionByZero, "rational function pole");
  return num_(x) / d;
}

RatFunc& RatFunc::operator+=(const RatFunc& o) {
  if (den_ == o.den_) *this = RatFunc(num_ + o.num_, den_);
  else *this = RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  return *this;
}

RatFunc& RatFunc::operator-=(const RatFunc& o) {
  if (den_ == o.den_) *this = RatFunc(num_ - o.num_, den_);
  else *this = RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
  return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& o) {
  if (is_zero() || o.is_zero()) return *this = RatFunc();
  if (is_polynomial() && o.is_polynomial()) {
    num_ *= o.num_;
    return *this;
  }
  *this = RatFunc(num_ * o.num_, den_ * o.den_);
  return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& o) {
  if (o.is_zero()) fail(Errc::DivisionByZero, "rational function division by zero");
  *this = RatFunc(num_ * o.den_, den_ * o.num_);
  return *this;
}

namespace {

std::string atom(const std::string& s) {
  bool compound = s.find_first_of(" +-", 1) != std::string::npos && s.front() != '(';
  return compound ? "(" + s + ")" : s;
}

}  // namespace

std::string RatFunc::str() const {
  if (is_polynomial()) return num_.str();
  return atom(num_.str()) + "/" + atom(den_.str());
}

}  // namespace kf
