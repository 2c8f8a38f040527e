#include "kf/field.hpp"

#include <cctype>
#include <ostream>

#include "kf/error.hpp"

namespace kf {

GaussianRational GaussianRational::make(long rn, long rd, long in, long id) {
  if (rd == 0 || id == 0) fail(Errc::DivisionByZero, "zero denominator");
  mpq_class re(rn, rd), im(in, id);
  re.canonicalize();
  im.canonicalize();
  return {re, im};
}

GaussianRational GaussianRational::inv() const {
  if (is_zero()) fail(Errc::DivisionByZero, "inverse of zero");
  mpq_class n = norm();
  return {mpq_class(re_ / n), mpq_class(-im_ / n)};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class r = re_ * o.re_ - im_ * o.im_;
  mpq_class m = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (o.is_zero()) fail(Errc::DivisionByZero, "division by zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inv();
}

mpq_class parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  auto is_int = [](const std::string& t, bool allow_sign) {
    size_t k = 0;
    if (allow_sign && k < t.size() && (t[k] == '-' || t[k] == '+')) ++k;
    if (k == t.size()) return false;
    for (; k < t.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(t[k]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = slash == std::string::npos ? s : s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!is_int(num, true) || !is_int(den, false))
    fail(Errc::ParseError, "malformed rational '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) fail(Errc::ParseError, "zero denominator in '" + text + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

std::string rational_str(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string GaussianRational::str() const {
  if (sgn(im_) == 0) return rational_str(re_);
  std::string ims;
  if (im_ == 1) ims = "i";
  else if (im_ == -1) ims = "-i";
  else ims = rational_str(im_) + "i";
  if (sgn(re_) == 0) return ims;
  if (ims[0] != '-') ims = "+" + ims;
  return rational_str(re_) + ims;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& x) { return os << x.str(); }

}  // namespace kf
