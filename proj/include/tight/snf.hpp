#pragma once

#include <vector>

#include "tight/rational.hpp"

namespace tight {

using IntMatrix = std::vector<std::vector<Int>>;

IntMatrix identity_matrix(size_t n);
IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b);
/// Exact determinant by fraction-free elimination.
Int mat_det(const IntMatrix& a);

/// Diagonalization U * L * V = diag(d_1, ..., d_n) with unimodular U, V,
/// d_i >= 0 and d_1 | d_2 | ... | d_n.
struct SmithForm {
  std::vector<Int> diagonal;
  IntMatrix U, V;
};

SmithForm smith_normal_form(const IntMatrix& L);

}  // namespace tight
