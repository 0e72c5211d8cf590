#pragma once

#include "zerocyc/int_matrix.hpp"

#include <cstddef>
#include <vector>

namespace zerocyc::exactalg {

/// Smith decomposition U*A*V = D with U, V unimodular and D diagonal.
/// The nonzero diagonal entries of D are the invariant factors, normalized
/// positive and ordered so that each divides the next.
struct SmithDecomposition {
  IntMatrix u;  // rows x rows
  IntMatrix d;  // rows x cols, diagonal
  IntMatrix v;  // cols x cols
  std::vector<Int> invariant_factors;
};

/// coker(A) = Z^free_rank  +  Z/t1 + Z/t2 + ...  (t = factors > 1).
struct CokernelShape {
  std::size_t free_rank = 0;
  std::vector<Int> torsion;
};

/// Deterministic Smith normal form. Pivot rule: smallest nonzero absolute
/// value, ties broken by lowest (row, col). Total on all well-formed
/// matrices, including empty ones.
SmithDecomposition smith_normal_form(IntMatrix a);

std::size_t rank(const IntMatrix& a);

/// Columns form a saturated basis of ker(A), i.e. a basis of the rational
/// kernel intersected with the integer lattice; the column span is a direct
/// summand of Z^cols. Size = cols - rank(A).
IntMatrix kernel_basis(const IntMatrix& a);

CokernelShape cokernel_shape(const IntMatrix& a);

/// True iff the columns span the full integer lattice Z^rows, i.e. the
/// number of invariant factors equals rows and they are all 1.
bool spans_full_lattice(const IntMatrix& columns);

/// Exact determinant of a square matrix (fraction-free Bareiss elimination).
Int determinant(IntMatrix a);

}  // namespace zerocyc::exactalg
