#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "kf/field.hpp"

namespace kf {

// Univariate polynomial in z, coefficients ascending, no trailing zeros.
class Poly {
 public:
  // degree() of the zero polynomial; stands for minus infinity.
  static constexpr int kMinusInf = -1;

  Poly() = default;
  Poly(const GaussianRational& c) {
    if (!c.is_zero()) c_.push_back(c);
  }
  Poly(int c) : Poly(GaussianRational(c)) {}
  Poly(long c) : Poly(GaussianRational(c)) {}
  explicit Poly(std::vector<GaussianRational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Poly(std::initializer_list<GaussianRational> coeffs) : c_(coeffs) { trim(); }

  static Poly z() { return Poly({0, 1}); }
  static Poly monomial(const GaussianRational& c, int k);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<GaussianRational>& coeffs() const { return c_; }
  GaussianRational coeff(int k) const {
    return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : GaussianRational();
  }
  const GaussianRational& lead() const { return c_.back(); }

  GaussianRational operator()(const GaussianRational& x) const;
  // Coefficient-wise conjugate: the scalar para-conjugate p~(z) = p(z*)^*.
  Poly conj() const;
  Poly monic() const;
  Poly shift(int k) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const GaussianRational& s);

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string str(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<GaussianRational> c_;
};

inline Poly operator+(Poly a, const Poly& b) { return a += b; }
inline Poly operator-(Poly a, const Poly& b) { return a -= b; }
inline Poly operator*(Poly a, const Poly& b) { return a *= b; }
inline bool is_zero(const Poly& p) { return p.is_zero(); }

// Quotient and remainder; DivisionByZero for b = 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
// Exact quotient; NotDivisible if the remainder is nonzero.
Poly exact_div(const Poly& a, const Poly& b);
Poly gcd(const Poly& a, const Poly& b);  // monic, gcd(0,0) = 0
Poly lcm(const Poly& a, const Poly& b);  // monic

// Element of the rational function field: num/den, den monic, gcd(num, den) = 1.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(int c) : num_(c), den_(1) {}
  RatFunc(const GaussianRational& c) : num_(c), den_(1) {}
  RatFunc(Poly p) : num_(std::move(p)), den_(1) {}
  RatFunc(Poly num, Poly den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  GaussianRational operator()(const GaussianRational& x) const;
  RatFunc conj() const { return RatFunc(num_.conj(), den_.conj()); }

  RatFunc operator-() const { return RatFunc(-num_, den_, true); }
  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string str() const;

 private:
  RatFunc(Poly num, Poly den, bool) : num_(std::move(num)), den_(std::move(den)) {}
  Poly num_;
  Poly den_;
};

inline RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
inline RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
inline RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
inline RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
inline bool is_zero(const RatFunc& r) { return r.is_zero(); }

}  // namespace kf
