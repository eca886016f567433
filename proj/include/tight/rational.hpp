#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "tight/errors.hpp"

namespace tight {

using Int = mpz_class;

/// Floor of a/b for b != 0 (rounds toward minus infinity).
Int floor_div(const Int& a, const Int& b);

/// Exact rational number. Always normalized: positive denominator,
/// gcd(|num|, den) = 1, zero is 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(runtime/explicit) - integers embed
  Rational(const Int& n) : v_(n) {}
  Rational(const Int& n, const Int& d);
  Rational(long n, long d) : Rational(Int(n), Int(d)) {}

  /// Parses "a" or "a/b" with an optional leading '-'.
  static Rational parse(std::string_view text);

  Int num() const { return v_.get_num(); }
  Int den() const { return v_.get_den(); }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_zero() const { return v_ == 0; }
  int sign() const { return sgn(v_); }

  /// Greatest integer not greater than the value.
  Int floor() const;
  /// Value minus its floor, in [0, 1).
  Rational frac() const;
  Rational reciprocal() const;

  /// "n" for integers, "n/d" otherwise.
  std::string str() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
  Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  mpq_class v_;
};

}  // namespace tight
