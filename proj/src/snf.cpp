#include "tight/snf.hpp"

#include <string>

namespace tight {

IntMatrix identity_matrix(size_t n) {
  IntMatrix m(n, std::vector<Int>(n, Int(0)));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix mat_mul(const IntMatrix& a, const IntMatrix& b) {
  size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  IntMatrix c(n, std::vector<Int>(m, Int(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

Int mat_det(const IntMatrix& a) {
  // Bareiss fraction-free elimination with row pivoting.
  size_t n = a.size();
  if (n == 0) return 1;
  IntMatrix m = a;
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

namespace {

struct Worker {
  IntMatrix a, u, v;
  size_t n;

  explicit Worker(const IntMatrix& L) : a(L), n(L.size()) {
    u = identity_matrix(n);
    v = identity_matrix(n);
  }

  void swap_rows(size_t i, size_t j) {
    if (i == j) return;
    std::swap(a[i], a[j]);
    std::swap(u[i], u[j]);
  }
  void swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
    for (size_t r = 0; r < n; ++r) std::swap(v[r][i], v[r][j]);
  }
  void add_row(size_t dst, size_t src, const Int& c) {  // row dst += c * row src
    for (size_t j = 0; j < n; ++j) a[dst][j] += c * a[src][j];
    for (size_t j = 0; j < n; ++j) u[dst][j] += c * u[src][j];
  }
  void add_col(size_t dst, size_t src, const Int& c) {  // col dst += c * col src
    for (size_t r = 0; r < n; ++r) a[r][dst] += c * a[r][src];
    for (size_t r = 0; r < n; ++r) v[r][dst] += c * v[r][src];
  }
  void negate_row(size_t i) {
    for (size_t j = 0; j < n; ++j) a[i][j] = -a[i][j];
    for (size_t j = 0; j < n; ++j) u[i][j] = -u[i][j];
  }

  // Moves the submatrix entry of smallest nonzero absolute value to (k, k).
  // Returns false if the submatrix is zero.
  bool pivot(size_t k) {
    size_t bi = n, bj = n;
    for (size_t i = k; i < n; ++i)
      for (size_t j = k; j < n; ++j)
        if (a[i][j] != 0 &&
            (bi == n || cmpabs(a[i][j].get_mpz_t(), a[bi][bj].get_mpz_t()) < 0))
          bi = i, bj = j;
    if (bi == n) return false;
    swap_rows(k, bi);
    swap_cols(k, bj);
    return true;
  }

  static int cmpabs(const mpz_t x, const mpz_t y) { return mpz_cmpabs(x, y); }

  void run() {
    for (size_t k = 0; k < n; ++k) {
      if (!pivot(k)) break;
      for (;;) {
        bool clean = true;
        for (size_t i = k + 1; i < n; ++i) {
          if (a[i][k] == 0) continue;
          add_row(i, k, -floor_div(a[i][k], a[k][k]));
          if (a[i][k] != 0) clean = false;
        }
        for (size_t j = k + 1; j < n; ++j) {
          if (a[k][j] == 0) continue;
          add_col(j, k, -floor_div(a[k][j], a[k][k]));
          if (a[k][j] != 0) clean = false;
        }
        if (clean) break;
        pivot(k);  // a smaller remainder became the new pivot candidate
      }
      if (a[k][k] < 0) negate_row(k);
      // The pivot must divide the rest of the submatrix; fold in an
      // offending row and restart this step if not.
      for (size_t i = k + 1; i < n; ++i)
        for (size_t j = k + 1; j < n; ++j)
          if (a[i][j] % a[k][k] != 0) {
            add_row(k, i, Int(1));
            --k;
            goto next;
          }
    next:;
    }
  }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& L) {
  size_t n = L.size();
  for (const auto& row : L)
    if (row.size() != n) throw ParseError("smith_normal_form requires a square matrix");
  Worker w(L);
  w.run();

  SmithForm out;
  out.diagonal.reserve(n);
  for (size_t i = 0; i < n; ++i) out.diagonal.push_back(w.a[i][i]);
  out.U = std::move(w.u);
  out.V = std::move(w.v);

  for (size_t i = 0; i + 1 < n; ++i)
    if (out.diagonal[i] != 0 && out.diagonal[i + 1] % out.diagonal[i] != 0)
      throw AuditError("smith_normal_form: divisibility chain broken at " + std::to_string(i));
  IntMatrix check = mat_mul(mat_mul(out.U, L), out.V);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (check[i][j] != (i == j ? out.diagonal[i] : Int(0)))
        throw AuditError("smith_normal_form: reconstruction U*L*V != diag");
  return out;
}

}  // namespace tight
