#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace infoloss {

/// Exact rational number over arbitrary-precision integers.
///
/// Values are always kept canonical: reduced to lowest terms with a positive
/// denominator, so componentwise comparison is exact equality. All measure
/// weights and scalars in this library are Rationals; floating point enters
/// only when entropies are evaluated.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long n) : value_(n) {}  // implicit by design: weights from literals
  Rational(long num, long den);
  Rational(const mpz_class& num, const mpz_class& den);

  /// Accepts "n" or "n/d" with an optional leading sign, digits only.
  /// Returns nullopt on malformed text or a zero denominator.
  static std::optional<Rational> parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_negative() const { return sgn(value_) < 0; }
  bool is_positive() const { return sgn(value_) > 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  double to_double() const { return value_.get_d(); }

  /// Canonical text form: "num/den", or just "num" when the denominator is 1.
  std::string str() const { return value_.get_str(); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.value_ = -a.value_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class value_;
};

}  // namespace infoloss
