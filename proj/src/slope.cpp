#include "tight/slope.hpp"

namespace tight {

const Rational& Slope::value() const {
  if (is_infinite()) throw ParseError("infinite slope has no rational value");
  return *v_;
}

GluingMatrix::GluingMatrix(Int p_, Int q_, Int u_, Int v_)
    : p(std::move(p_)), q(std::move(q_)), u(std::move(u_)), v(std::move(v_)) {
  if (det() != 1)
    throw ParseError("gluing matrix must have determinant 1, got " + det().get_str());
}

GluingMatrix operator*(const GluingMatrix& a, const GluingMatrix& b) {
  return GluingMatrix(a.p * b.p + a.u * b.q, a.q * b.p + a.v * b.q,
                      a.p * b.u + a.u * b.v, a.q * b.u + a.v * b.v);
}

Slope mobius_apply(const GluingMatrix& m, const Slope& s) {
  if (s.is_infinite()) {
    if (m.p == 0) return Slope::infinity();
    return Slope(Rational(m.q, m.p));
  }
  const Int& n = s.value().num();
  const Int& d = s.value().den();
  Int den = m.p * d + m.u * n;
  if (den == 0) return Slope::infinity();
  return Slope(Rational(m.q * d + m.v * n, den));
}

Slope neighborhood_slope(const Int& t, const GluingMatrix& m) {
  if (t > -1) throw ParseError("neighborhood twisting must be <= -1, got " + t.get_str());
  Int den = t * m.p + m.u;
  Slope s = (den == 0) ? Slope::infinity() : Slope(Rational(t * m.q + m.v, den));
  if (t < -2) {
    bool ok = false;
    if (!s.is_infinite() && m.p != 0) {
      Rational qp(m.q, m.p);
      ok = Rational(floor_div(m.q, m.p)) < s.value() && s.value() < qp;
    }
    if (!ok)
      throw AuditError("neighborhood slope " + s.str() + " violates floor(q/p) < s < q/p for t=" +
                       t.get_str() + "; gluing matrix is corrupted");
  }
  return s;
}

}  // namespace tight
