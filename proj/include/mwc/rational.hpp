#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mwc {

using BigInt = mpz_class;

BigInt big_pow2(unsigned k);
BigInt factorial(unsigned k);
BigInt binomial(unsigned n, unsigned k);

// Exact fraction. Always stored reduced with the sign on the numerator and a
// positive denominator; zero is canonically 0/1. All index computations run on
// this type (or BigInt) — the alternating sums below cancel massively and
// would be meaningless in floating point.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int v) : v_(v) {}
  Rational(long v) : v_(v) {}
  Rational(const BigInt& v) : v_(v) {}

  // Reduces num/den to canonical form. Throws ValidationError(ZeroDenominator)
  // if den == 0.
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  // Accepts "p", "p/q", with an optional leading sign on p.
  static Rational parse(std::string_view s);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }
  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }

  // "p/q" in lowest terms, e.g. "7/30", "0/1", "-11/30".
  std::string str() const;
  // Decimal approximation rounded half away from zero; display only.
  std::string decimal(int digits) const;

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.v_ = -a.v_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

 private:
  mpq_class v_;
};

}  // namespace mwc
