#pragma once

#include "zerocyc/config.hpp"
#include "zerocyc/int_matrix.hpp"
#include "zerocyc/layout.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace zerocyc::mv {

enum class Side { Upstream, Downstream };

/// The integer matrices of the comparison diagram between the downstream
/// and upstream H0-level restriction complexes, over one abstract
/// coefficient generator per copy of the coefficient group:
///
///   Z^n1 --phi_downstream--> Z^n2 --dQ--> Z^n3
///    |nu1                      |eps3
///   Z^m1 --phi_upstream---> Z^m2
///
/// Rows and columns follow the canonical orders fixed by config::Layout.
struct ComplexPair {
  IntMatrix phi_downstream;  // n2 x n1, rows have one +1 (lower index) and one -1
  IntMatrix dQ;              // n3 x n2, Cech rows +1/-1/+1 per triple point
  IntMatrix phi_upstream;    // m2 x m1, signs inherited from downstream order
  IntMatrix nu1;             // m1 x n1, 0/1, column sums = sheet counts
  IntMatrix eps3;            // m2 x n2, unit row per point, zero on node pairs

  config::Counts counts;
  std::size_t node_pairs = 0;  // = number of zero rows of eps3

  // Canonical axis labels, for dumps and diagnostics.
  std::vector<std::string> down_components;  // columns of phi_downstream/nu1
  std::vector<std::string> up_components;    // columns of phi_upstream
  std::vector<std::string> up_points;        // rows of phi_upstream/eps3
  std::vector<std::string> entries;          // rows of phi_downstream
  std::vector<std::string> triples;          // rows of dQ
};

/// Pre: cfg passed validation.
ComplexPair build_complexes(const config::GluingConfiguration& cfg);

/// Free rank of H0 of the quotient term: n2 - n3. Asserts that dQ is
/// surjective over the integers; failure signals a model bug, not bad input.
std::size_t h0_Q_rank(const ComplexPair& pair);

/// Kernel rank of phi on the requested side (downstream images lie in
/// ker dQ automatically). Equals 1 for connected configurations.
std::size_t h0_kernel_rank(const ComplexPair& pair, Side side);

/// eps3 * phi_downstream == phi_upstream * nu1 and dQ * phi_downstream == 0.
bool check_commutativity(const ComplexPair& pair);

/// All five matrices in the normative dump format.
std::string dump_matrices(const ComplexPair& pair);

}  // namespace zerocyc::mv
