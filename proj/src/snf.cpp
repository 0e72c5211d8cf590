#include "zerocyc/snf.hpp"

#include <cassert>
#include <cstdlib>
#include <optional>
#include <utility>

namespace zerocyc::exactalg {

namespace {

Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

// Smallest nonzero |entry| in the trailing submatrix [t.., t..];
// ties broken by lowest (row, col).
std::optional<std::pair<std::size_t, std::size_t>> find_pivot(
    const IntMatrix& a, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Int best_abs;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Int v = abs_int(a(i, j));
      if (!best || v < best_abs) {
        best = {i, j};
        best_abs = v;
      }
    }
  return best;
}

}  // namespace

SmithDecomposition smith_normal_form(IntMatrix a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithDecomposition out;
  out.u = IntMatrix::identity(m);
  out.v = IntMatrix::identity(n);

  std::size_t t = 0;
  while (t < m && t < n) {
    auto piv = find_pivot(a, t);
    if (!piv) break;
    a.swap_rows(t, piv->first);
    out.u.swap_rows(t, piv->first);
    a.swap_cols(t, piv->second);
    out.v.swap_cols(t, piv->second);

    bool settled = false;
    while (!settled) {
      // Reduce column t with row operations. Truncated division leaves
      // remainders strictly smaller than the pivot, so repeating the
      // pivot selection terminates.
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a(i, t) == 0) continue;
        Int q = a(i, t) / a(t, t);
        a.add_row_multiple(i, t, q);
        out.u.add_row_multiple(i, t, q);
        if (a(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a(t, j) == 0) continue;
        Int q = a(t, j) / a(t, t);
        a.add_col_multiple(j, t, q);
        out.v.add_col_multiple(j, t, q);
        if (a(t, j) != 0) dirty = true;
      }
      if (dirty) {
        auto p2 = find_pivot(a, t);
        a.swap_rows(t, p2->first);
        out.u.swap_rows(t, p2->first);
        a.swap_cols(t, p2->second);
        out.v.swap_cols(t, p2->second);
        continue;
      }
      // Row and column are clear. Enforce that the pivot divides the whole
      // trailing submatrix; otherwise fold an offending row in and redo.
      settled = true;
      for (std::size_t i = t + 1; i < m && settled; ++i)
        for (std::size_t j = t + 1; j < n && settled; ++j)
          if (a(i, j) % a(t, t) != 0) {
            a.add_row_multiple(t, i, Int(-1));
            out.u.add_row_multiple(t, i, Int(-1));
            settled = false;
          }
    }
    ++t;
  }

  for (std::size_t i = 0; i < t; ++i)
    if (a(i, i) < 0) {
      a.negate_row(i);
      out.u.negate_row(i);
    }

  for (std::size_t i = 0; i < t; ++i) out.invariant_factors.push_back(a(i, i));
  out.d = std::move(a);
  return out;
}

std::size_t rank(const IntMatrix& a) {
  return smith_normal_form(a).invariant_factors.size();
}

IntMatrix kernel_basis(const IntMatrix& a) {
  SmithDecomposition s = smith_normal_form(a);
  std::size_t r = s.invariant_factors.size();
  // A * (V e_j) = U^{-1} D e_j = 0 for j >= rank; V unimodular makes the
  // span of these columns a direct summand, hence saturated.
  return s.v.column_slice(r, a.cols() - r);
}

CokernelShape cokernel_shape(const IntMatrix& a) {
  SmithDecomposition s = smith_normal_form(a);
  CokernelShape shape;
  shape.free_rank = a.rows() - s.invariant_factors.size();
  for (const Int& f : s.invariant_factors)
    if (f > 1) shape.torsion.push_back(f);
  return shape;
}

bool spans_full_lattice(const IntMatrix& columns) {
  SmithDecomposition s = smith_normal_form(columns);
  if (s.invariant_factors.size() != columns.rows()) return false;
  for (const Int& f : s.invariant_factors)
    if (f != 1) return false;
  return true;
}

Int determinant(IntMatrix a) {
  assert(a.rows() == a.cols());
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        a(i, j) = num / prev;  // Bareiss: division is exact
      }
    prev = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

}  // namespace zerocyc::exactalg
