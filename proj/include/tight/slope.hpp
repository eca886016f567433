#pragma once

#include <optional>
#include <string>

#include "tight/rational.hpp"

namespace tight {

/// A slope on a torus: a rational value or the distinguished infinite slope.
class Slope {
 public:
  Slope() : v_(Rational(0)) {}
  explicit Slope(Rational v) : v_(std::move(v)) {}
  static Slope infinity() { return Slope(std::nullopt); }

  bool is_infinite() const { return !v_.has_value(); }
  const Rational& value() const;
  std::string str() const { return is_infinite() ? "inf" : v_->str(); }

  friend bool operator==(const Slope& a, const Slope& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Slope& a, const Slope& b) { return a.v_ != b.v_; }

 private:
  explicit Slope(std::optional<Rational> v) : v_(std::move(v)) {}
  std::optional<Rational> v_;
};

/// Entries of a determinant-one integral 2x2 matrix
///   ( p  u )
///   ( q  v )
/// acting projectively on slopes.
struct GluingMatrix {
  Int p, q, u, v;

  GluingMatrix(Int p_, Int q_, Int u_, Int v_);
  Int det() const { return p * v - q * u; }
  friend GluingMatrix operator*(const GluingMatrix& a, const GluingMatrix& b);
};

/// Projectivized action on a slope n/d: the pair (d, n) maps to
/// (p*d + u*n, q*d + v*n), read back as a slope. A vanishing image
/// denominator yields the infinite slope; the infinite slope maps to q/p.
Slope mobius_apply(const GluingMatrix& m, const Slope& s);

/// Slope (t*q + v)/(t*p + u) of the boundary of a standard neighborhood with
/// twisting t, measured on the target side of m. For t < -2 the result must
/// lie strictly between floor(q/p) and q/p; a violation signals corrupted
/// matrix data and raises an audit error.
Slope neighborhood_slope(const Int& t, const GluingMatrix& m);

}  // namespace tight
