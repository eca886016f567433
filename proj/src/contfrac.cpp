#include "tight/contfrac.hpp"

#include <string>

namespace tight {
namespace {

std::string list_str(std::span<const Int> coeffs) {
  std::string s = "<";
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += ",";
    s += coeffs[i].get_str();
  }
  return s + ">";
}

// Raw recurrence over an arbitrary coefficient list; returns the final two
// convergent pairs. No invariant checks.
struct RawTable {
  std::vector<Int> p, q;
};

RawTable raw_convergents(std::span<const Int> coeffs) {
  RawTable t;
  t.p = {Int(-1), Int(0)};
  t.q = {Int(0), Int(1)};
  for (const Int& a : coeffs) {
    size_t k = t.p.size();
    t.p.push_back(-a * t.p[k - 1] - t.p[k - 2]);
    t.q.push_back(-a * t.q[k - 1] - t.q[k - 2]);
  }
  return t;
}

}  // namespace

NegContFrac::NegContFrac(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw ParseError("empty continued fraction");
  if (coeffs_[0] > -1)
    throw ParseError("continued fraction head must be <= -1, got " + coeffs_[0].get_str());
  for (size_t j = 1; j < coeffs_.size(); ++j)
    if (coeffs_[j] > -2)
      throw ParseError("continued fraction tail entry a_" + std::to_string(j) +
                       " must be <= -2, got " + coeffs_[j].get_str());
}

NegContFrac expand(const Rational& r) {
  if (r <= Rational(0)) throw ParseError("expand requires a positive rational, got " + r.str());
  std::vector<Int> coeffs;
  Rational y = -r;
  for (;;) {
    if (y.is_integer()) {
      coeffs.push_back(y.num());
      break;
    }
    Int a = y.floor();
    coeffs.push_back(a);
    y = -(y - Rational(a)).reciprocal();
  }
  return NegContFrac(std::move(coeffs));
}

Rational evaluate_coeffs(std::span<const Int> coeffs) {
  RawTable t = raw_convergents(coeffs);
  const Int& pm = t.p.back();
  const Int& qm = t.q.back();
  if (pm == 0)
    throw ParseError("continued fraction " + list_str(coeffs) + " has infinite value");
  return Rational(-qm, pm);
}

Rational evaluate(const NegContFrac& cf) { return evaluate_coeffs(cf.coeffs()); }

ConvergentTable convergents(const NegContFrac& cf) {
  RawTable t = raw_convergents(cf.coeffs());
  ConvergentTable table{std::move(t.p), std::move(t.q)};
  long m = table.order();
  for (long j = 1; j <= m; ++j) {
    if (!(table.p_at(j) >= table.p_at(j - 1) && table.p_at(j - 1) > 0 &&
          table.q_at(j) >= table.q_at(j - 1) && table.q_at(j - 1) > 0))
      throw AuditError("convergent growth violated at j=" + std::to_string(j) + " for " +
                       list_str(cf.coeffs()));
    if (table.p_at(j) * table.q_at(j - 1) - table.p_at(j - 1) * table.q_at(j) != 1)
      throw AuditError("convergent determinant != 1 at j=" + std::to_string(j) + " for " +
                       list_str(cf.coeffs()));
    Int g;
    mpz_gcd(g.get_mpz_t(), table.p_at(j).get_mpz_t(), table.q_at(j).get_mpz_t());
    if (g != 1)
      throw AuditError("gcd(p_j, q_j) != 1 at j=" + std::to_string(j) + " for " +
                       list_str(cf.coeffs()));
  }
  return table;
}

Rational reversal_value(const NegContFrac& cf) {
  size_t m = cf.order();
  if (m < 1) throw ParseError("reversal_value requires at least two coefficients");
  std::vector<Int> rev;
  rev.reserve(m);
  for (size_t j = m; j >= 2; --j) rev.push_back(cf[j]);
  rev.push_back(cf[1] + 1);
  Rational lhs = evaluate_coeffs(rev);

  ConvergentTable t = convergents(cf);
  Int shift = cf[0] + 1;
  Int den = t.q_at(static_cast<long>(m) - 1) + shift * t.p_at(static_cast<long>(m) - 1);
  if (den == 0)
    throw ParseError("reversal identity degenerate (zero denominator) for " +
                     list_str(cf.coeffs()));
  Rational rhs(-(t.q_at(static_cast<long>(m)) + shift * t.p_at(static_cast<long>(m))), den);
  if (lhs != rhs)
    throw AuditError("reversal identity failed for " + list_str(cf.coeffs()) + ": " + lhs.str() +
                     " != " + rhs.str());
  return lhs;
}

NegContFrac decrement_head(const NegContFrac& cf) {
  std::vector<Int> coeffs = cf.coeffs();
  coeffs[0] -= 1;
  NegContFrac out{std::move(coeffs)};
  if (evaluate(out) != evaluate(cf) - Rational(1))
    throw AuditError("decrement_head value check failed for " + list_str(cf.coeffs()));
  return out;
}

NegContFrac e0_chain_expansion(const Int& p, const Int& q, const Int& e0) {
  if (!(q > 0 && q < p)) throw ParseError("e0_chain_expansion requires 0 < q < p");
  Int g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
  if (g != 1) throw ParseError("e0_chain_expansion requires gcd(p, q) = 1");
  if (e0 < 1) throw ParseError("e0_chain_expansion requires e0 >= 1");

  NegContFrac base = expand(Rational(p, q));
  std::vector<Int> coeffs;
  for (Int k = 1; k < e0; ++k) coeffs.push_back(Int(-2));
  coeffs.push_back(base[0] - 1);
  for (size_t j = 1; j < base.size(); ++j) coeffs.push_back(base[j]);
  NegContFrac out{std::move(coeffs)};

  Rational expected(-(q + e0 * p), q + (e0 - 1) * p);
  if (evaluate(out) != expected)
    throw AuditError("e0_chain_expansion value check failed: " + evaluate(out).str() +
                     " != " + expected.str());
  return out;
}

GluingMatrix gluing_matrix(const NegContFrac& cf) {
  ConvergentTable t = convergents(cf);
  long m = t.order();
  return GluingMatrix(t.p_at(m), t.q_at(m), t.p_at(m - 1), t.q_at(m - 1));
}

}  // namespace tight
