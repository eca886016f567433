#include "tight/seifert.hpp"

#include <cctype>

namespace tight {
namespace {

std::pair<Int, Int> positive_pq(const Rational& value) {
  // value = q/p with q, p > 0 coprime.
  return {value.den(), value.num()};
}

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

SeifertInvariants make_invariants(const Rational& r1, const Rational& r2, const Rational& r3) {
  std::array<Rational, 3> r{r1, r2, r3};
  for (size_t i = 0; i < 3; ++i)
    if (r[i].is_integer())
      throw ParseError("r" + std::to_string(i + 1) + " = " + r[i].str() +
                       " is integral: not three singular fibers");
  Int e0 = r[0].floor() + r[1].floor() + r[2].floor();
  return SeifertInvariants{std::move(r), std::move(e0)};
}

SeifertInvariants parse_seifert(std::string_view text) {
  size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string_view t = text.substr(b, e - b);

  std::array<std::string_view, 3> parts;
  if (!t.empty() && t.front() == 'M') {
    size_t open = t.find('(');
    if (open == std::string_view::npos || t.back() != ')')
      throw ParseError("expected M(r1,r2,r3) at position " + std::to_string(b));
    std::string_view inner = t.substr(open + 1, t.size() - open - 2);
    size_t c1 = inner.find(',');
    size_t c2 = (c1 == std::string_view::npos) ? std::string_view::npos : inner.find(',', c1 + 1);
    if (c1 == std::string_view::npos || c2 == std::string_view::npos ||
        inner.find(',', c2 + 1) != std::string_view::npos)
      throw ParseError("expected three comma-separated coefficients in '" + std::string(t) + "'");
    parts = {inner.substr(0, c1), inner.substr(c1 + 1, c2 - c1 - 1), inner.substr(c2 + 1)};
  } else {
    size_t pos = 0;
    for (int i = 0; i < 3; ++i) {
      while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
      size_t start = pos;
      while (pos < t.size() && !std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
      if (start == pos)
        throw ParseError("expected three coefficients, got '" + std::string(t) + "'");
      parts[i] = t.substr(start, pos - start);
    }
    while (pos < t.size() && std::isspace(static_cast<unsigned char>(t[pos]))) ++pos;
    if (pos != t.size())
      throw ParseError("trailing input after three coefficients: '" + std::string(t) + "'");
  }
  return make_invariants(Rational::parse(parts[0]), Rational::parse(parts[1]),
                         Rational::parse(parts[2]));
}

TheoremForm normalize(const SeifertInvariants& s) {
  if (s.e0 >= -2 && s.e0 <= 0)
    throw OutOfScopeError("e0 = " + s.e0.get_str() + " is outside the classified range");

  std::array<Rational, 3> f;
  for (size_t i = 0; i < 3; ++i) f[i] = s.r[i].frac();  // each in (0, 1)

  TheoremForm form;
  form.e0 = s.e0;
  if (s.e0 <= -3) {
    form.variant = Variant::ClassNeg;
    // Representative (f1 - 1, f2 - 1, e0 + 2 + f3); entry i is -q_i/p_i.
    std::array<Rational, 3> rep{f[0] - Rational(1), f[1] - Rational(1),
                                Rational(Int(s.e0 + 2)) + f[2]};
    for (size_t i = 0; i < 3; ++i) form.pq[i] = positive_pq(-rep[i]);
  } else {
    form.variant = Variant::ClassPos;
    // Representative (f1, f2, e0 + f3); the pairs come from f_i = q_i/p_i.
    for (size_t i = 0; i < 3; ++i) form.pq[i] = positive_pq(f[i]);
  }
  return form;
}

SeifertInvariants to_invariants(const TheoremForm& form) {
  const auto& pq = form.pq;
  if (form.variant == Variant::ClassNeg) {
    return make_invariants(Rational(-pq[0].second, pq[0].first),
                           Rational(-pq[1].second, pq[1].first),
                           Rational(-pq[2].second, pq[2].first));
  }
  return make_invariants(Rational(pq[0].second, pq[0].first),
                         Rational(pq[1].second, pq[1].first),
                         Rational(form.e0) + Rational(pq[2].second, pq[2].first));
}

TightCount count_tight(const TheoremForm& form) {
  TightCount out;
  out.total = 1;
  if (form.variant == Variant::ClassNeg) {
    Int head = abs_int(form.e0 + 1);
    out.factors.emplace_back("e0+1", head);
    out.total *= head;
    for (size_t i = 0; i < 3; ++i) {
      NegContFrac cf = expand(Rational(form.pq[i].second, form.pq[i].first));
      Int factor = 1;
      for (size_t j = 1; j < cf.size(); ++j) factor *= abs_int(cf[j] + 1);
      out.factors.emplace_back("fiber" + std::to_string(i + 1), factor);
      out.total *= factor;
    }
  } else {
    for (size_t i = 0; i < 3; ++i) {
      NegContFrac cf = expand(Rational(form.pq[i].first, form.pq[i].second));
      Int factor = abs_int(cf[0]);
      for (size_t j = 1; j < cf.size(); ++j) factor *= abs_int(cf[j] + 1);
      out.factors.emplace_back("fiber" + std::to_string(i + 1), factor);
      out.total *= factor;
    }
  }
  return out;
}

Int h1_order_from_invariants(const SeifertInvariants& s) {
  Rational sum = s.r[0] + s.r[1] + s.r[2];
  Rational scaled = sum * Rational(Int(s.r[0].den() * s.r[1].den() * s.r[2].den()));
  // The product of denominators clears every fraction.
  if (!scaled.is_integer()) throw AuditError("h1_order_from_invariants: non-integral result");
  return abs_int(scaled.num());
}

}  // namespace tight
