#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace kf {

// Exact complex scalar re + im*i with arbitrary-precision rational parts.
class GaussianRational {
 public:
  GaussianRational() : re_(0), im_(0) {}
  GaussianRational(int re) : re_(re), im_(0) {}
  GaussianRational(long re) : re_(re), im_(0) {}
  GaussianRational(mpq_class re) : re_(std::move(re)), im_(0) {}
  GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }
  // Builds (rn/rd) + (in/id)i; throws DivisionByZero on a zero denominator.
  static GaussianRational make(long rn, long rd, long in = 0, long id = 1);

  const mpq_class& re() const { return re_; }
  const mpq_class& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {re_, -im_}; }
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational inv() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

  std::string str() const;

 private:
  mpq_class re_;
  mpq_class im_;
};

using Scalar = GaussianRational;

inline GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
inline GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
inline GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
inline GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }

inline GaussianRational conjugate(const GaussianRational& x) { return x.conj(); }
inline GaussianRational invert(const GaussianRational& x) { return x.inv(); }
inline bool is_zero(const GaussianRational& x) { return x.is_zero(); }

// Parses "<int>[/<int>]"; ParseError on malformed text or zero denominator.
mpq_class parse_rational(const std::string& text);
std::string rational_str(const mpq_class& q);

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

}  // namespace kf
