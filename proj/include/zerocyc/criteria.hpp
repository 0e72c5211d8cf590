#pragma once

#include "zerocyc/complexes.hpp"
#include "zerocyc/config.hpp"
#include "zerocyc/int_matrix.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace zerocyc::criteria {

/// Rank data of the SK1 presentation on one side: a free part of copies of
/// the coefficient group at H0 (the cokernel of phi) and one unit-group
/// generator per component at H1.
struct Sk1Presentation {
  std::size_t k2_part_rank = 0;
  std::size_t units_part_rank = 0;
};

struct NumericalCriterion {
  long long lhs = 0;  // m1 - m2
  long long rhs = 0;  // n1 - n2 + n3
  bool holds = false;
};

NumericalCriterion numerical_criterion(const config::Counts& counts);

/// True iff the columns of eps3 restricted to ker(dQ) (via a saturated
/// kernel basis) together with the columns of phi_upstream span the full
/// integer lattice Z^m2. This is integral generation, not merely rational
/// surjectivity.
bool generation_check(const mv::ComplexPair& pair);

Sk1Presentation sk1_presentation(const mv::ComplexPair& pair, mv::Side side);

struct PreconditionError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Free unit-module rank m1 - rank(nu1) of the cokernel of the SK1
/// comparison map. Pre: generation_check(pair); otherwise the coefficient
/// part of the cokernel is unresolved and this throws PreconditionError.
std::size_t sk1_coker_units_rank(const mv::ComplexPair& pair);

/// True iff the columns of nu1 together with extra_generators span Z^m1.
/// Throws std::invalid_argument on a row-count mismatch.
bool h1_span_check(const mv::ComplexPair& pair, const IntMatrix& extra_generators);

/// Kernel dimension of the induced comparison coker(nu1) -> coker(eps3|ker dQ)
/// over the exact rationals, the snake-lemma term of the structure-sheaf
/// comparison. Equals (m1-n1) - (m2-n2+n3) whenever the cohomological
/// hypotheses hold (connected sides, injective restriction, full rational
/// generation).
std::size_t structure_sheaf_h1_kernel(const mv::ComplexPair& pair);

enum class Verdict { FiniteDimensional, NotEstablished };

struct TraceEntry {
  std::string tag;       // lemma/theorem label
  std::string quantity;  // what was checked
  std::variant<long long, bool> value;
};

struct CriterionReport {
  config::Counts counts;
  long long inequality_lhs = 0;
  long long inequality_rhs = 0;
  bool inequality_holds = false;
  bool generation_holds = false;
  std::optional<std::size_t> sk1_coker_units_rank;  // absent if generation fails
  std::size_t structure_h1_kernel = 0;
  Verdict verdict = Verdict::NotEstablished;
  std::vector<TraceEntry> paper_trace;
};

struct ValidationError : std::runtime_error {
  explicit ValidationError(config::ValidationReport report);
  config::ValidationReport report;
};

/// Full pipeline: validate, count, build complexes, check the inequality
/// and generation, assemble the SK1 ledger. The verdict is FiniteDimensional
/// iff generation holds and the caller asserts finite-dimensionality of the
/// normalization.
CriterionReport full_verdict(const config::GluingConfiguration& cfg,
                             bool normalization_finite_dimensional);

/// Byte-stable JSON serialization with exactly the report fields plus
/// "paper_trace".
std::string to_json(const CriterionReport& report);

std::string to_text(const CriterionReport& report);

}  // namespace zerocyc::criteria
