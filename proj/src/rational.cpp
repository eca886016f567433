#include "tight/rational.hpp"

#include <cctype>

namespace tight {

Int floor_div(const Int& a, const Int& b) {
  if (b == 0) throw ParseError("floor_div: division by zero");
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Rational::Rational(const Int& n, const Int& d) : v_(n, d) {
  if (d == 0) throw ParseError("rational with zero denominator");
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  // Strip surrounding whitespace.
  size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view t = text.substr(b, e - b);
  if (t.empty()) throw ParseError("empty rational literal");

  auto is_int = [](std::string_view s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };

  size_t slash = t.find('/');
  if (slash == std::string_view::npos) {
    if (!is_int(t)) throw ParseError("bad rational literal: '" + std::string(text) + "'");
    return Rational(Int(std::string(t)));
  }
  std::string_view ns = t.substr(0, slash), ds = t.substr(slash + 1);
  if (!is_int(ns) || !is_int(ds))
    throw ParseError("bad rational literal: '" + std::string(text) + "'");
  Int d{std::string(ds)};
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(Int(std::string(ns)), d);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw ParseError("rational division by zero");
  return Rational(mpq_class(a.v_ / b.v_));
}

Int Rational::floor() const { return floor_div(num(), den()); }

Rational Rational::frac() const { return *this - Rational(floor()); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw ParseError("reciprocal of zero");
  return Rational(den(), num());
}

std::string Rational::str() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

}  // namespace tight
