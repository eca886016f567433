#pragma once

#include <span>
#include <vector>

#include "tight/rational.hpp"
#include "tight/slope.hpp"

namespace tight {

/// Coefficients <a_0, a_1, ..., a_m> of a negative continued fraction
///   a_0 - 1/(a_1 - 1/(... - 1/a_m))
/// with a_0 <= -1 and a_j <= -2 for j >= 1.
class NegContFrac {
 public:
  explicit NegContFrac(std::vector<Int> coeffs);

  const std::vector<Int>& coeffs() const { return coeffs_; }
  size_t size() const { return coeffs_.size(); }
  /// Index of the last coefficient.
  size_t order() const { return coeffs_.size() - 1; }
  const Int& operator[](size_t j) const { return coeffs_[j]; }

  friend bool operator==(const NegContFrac& a, const NegContFrac& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<Int> coeffs_;
};

/// Convergent sequences p_j, q_j for j = -2, ..., m, seeded
/// p_{-2} = -1, p_{-1} = 0, q_{-2} = 0, q_{-1} = 1 and extended by
/// p_j = -a_j p_{j-1} - p_{j-2} (likewise q).
struct ConvergentTable {
  std::vector<Int> p, q;  // entry k holds index j = k - 2

  const Int& p_at(long j) const { return p.at(static_cast<size_t>(j + 2)); }
  const Int& q_at(long j) const { return q.at(static_cast<size_t>(j + 2)); }
  long order() const { return static_cast<long>(p.size()) - 3; }
};

/// Unique expansion of -r, r > 0, into a NegContFrac. For integer r the
/// result is the single-term list <-r>.
NegContFrac expand(const Rational& r);

/// Value of the continued fraction, computed as -q_m/p_m from the
/// convergent recurrence.
Rational evaluate(const NegContFrac& cf);

/// Recurrence evaluation of an arbitrary integer coefficient list; used for
/// reversed lists whose trailing entry may be -1. Throws if the value is
/// infinite (vanishing final convergent denominator).
Rational evaluate_coeffs(std::span<const Int> coeffs);

/// Full convergent table with the growth, determinant and coprimality
/// invariants checked.
ConvergentTable convergents(const NegContFrac& cf);

/// Value of the reversed-and-adjusted list <a_m, ..., a_2, a_1 + 1>,
/// cross-checked against -(q_m + (a_0+1) p_m) / (q_{m-1} + (a_0+1) p_{m-1}).
/// Requires m >= 1; the degenerate vanishing-denominator case is rejected.
Rational reversal_value(const NegContFrac& cf);

/// <a_0 - 1, a_1, ..., a_m>; the value drops by exactly 1.
NegContFrac decrement_head(const NegContFrac& cf);

/// Expansion of -(q + e0*p)/(q + (e0-1)*p) for 0 < q < p coprime and
/// e0 >= 1: e0 - 1 leading -2's, then b_0 - 1, b_1, ..., b_l where
/// <b_0, ..., b_l> expands p/q.
NegContFrac e0_chain_expansion(const Int& p, const Int& q, const Int& e0);

/// Gluing matrix (p_m, q_m, p_{m-1}, q_{m-1}) built from the convergents.
GluingMatrix gluing_matrix(const NegContFrac& cf);

}  // namespace tight
