#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tight/contfrac.hpp"
#include "tight/rational.hpp"

namespace tight {

/// A small Seifert space M(r1, r2, r3): three non-integral rational
/// invariants and the derived e0 = floor(r1) + floor(r2) + floor(r3).
struct SeifertInvariants {
  std::array<Rational, 3> r;
  Int e0;
};

/// Validates non-integrality of each coefficient and computes e0.
SeifertInvariants make_invariants(const Rational& r1, const Rational& r2, const Rational& r3);

/// Accepts "M(r1,r2,r3)" or a whitespace-separated triple "r1 r2 r3".
SeifertInvariants parse_seifert(std::string_view text);

enum class Variant {
  ClassNeg,  // e0 <= -3: M(-q1/p1, -q2/p2, -q3/p3)
  ClassPos,  // e0 >= +1: M(q1/p1, q2/p2, e0 + q3/p3)
};

/// Theorem-shaped normal form: three positive coprime pairs (p_i, q_i) plus
/// the variant and e0. ClassNeg has p_i >= 2, q_i >= 1; ClassPos additionally
/// has q_i < p_i.
struct TheoremForm {
  Variant variant;
  std::array<std::pair<Int, Int>, 3> pq;  // (p_i, q_i)
  Int e0;
};

/// Routes to the variant matching the sign of e0; e0 in {0,-1,-2} is out of
/// scope. The integer parts are concentrated on the third fiber.
TheoremForm normalize(const SeifertInvariants& s);

/// Reconstructs the represented triple from a normal form.
SeifertInvariants to_invariants(const TheoremForm& form);

struct TightCount {
  Int total;
  std::vector<std::pair<std::string, Int>> factors;  // (label, factor)
};

/// Closed-form tight contact structure count: |e0+1| * prod |a_j + 1| over
/// the expansions of -q_i/p_i for ClassNeg, prod |b_0| * prod |b_j + 1| over
/// the expansions of -p_i/q_i for ClassPos.
TightCount count_tight(const TheoremForm& form);

/// |d1*d2*d3 * (r1 + r2 + r3)| where d_i are the lowest-term denominators;
/// 0 encodes infinite first homology.
Int h1_order_from_invariants(const SeifertInvariants& s);

}  // namespace tight
