#include "zerocyc/criteria.hpp"

#include "zerocyc/snf.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace zerocyc::criteria {

using exactalg::kernel_basis;
using exactalg::rank;
using exactalg::spans_full_lattice;

NumericalCriterion numerical_criterion(const config::Counts& c) {
  NumericalCriterion out;
  out.lhs = c.m1 - c.m2;
  out.rhs = c.n1 - c.n2 + c.n3;
  out.holds = out.lhs >= out.rhs;
  return out;
}

bool generation_check(const mv::ComplexPair& pair) {
  IntMatrix restricted = pair.eps3 * kernel_basis(pair.dQ);
  return spans_full_lattice(hcat(restricted, pair.phi_upstream));
}

Sk1Presentation sk1_presentation(const mv::ComplexPair& pair, mv::Side side) {
  Sk1Presentation out;
  if (side == mv::Side::Upstream) {
    out.k2_part_rank = pair.phi_upstream.rows() - rank(pair.phi_upstream);
    out.units_part_rank = pair.phi_upstream.cols();
  } else {
    std::size_t h0q = pair.dQ.cols() - rank(pair.dQ);
    out.k2_part_rank = h0q - rank(pair.phi_downstream);
    out.units_part_rank = pair.phi_downstream.cols();
  }
  return out;
}

std::size_t sk1_coker_units_rank(const mv::ComplexPair& pair) {
  if (!generation_check(pair))
    throw PreconditionError(
        "sk1_coker_units_rank requires the generation condition; without it "
        "the coefficient-part obstruction is unresolved");
  return pair.nu1.rows() - rank(pair.nu1);
}

bool h1_span_check(const mv::ComplexPair& pair,
                   const IntMatrix& extra_generators) {
  if (extra_generators.rows() != pair.nu1.rows())
    throw std::invalid_argument(
        "extra_generators must have m1 = " + std::to_string(pair.nu1.rows()) +
        " rows, got " + std::to_string(extra_generators.rows()));
  return spans_full_lattice(hcat(pair.nu1, extra_generators));
}

std::size_t structure_sheaf_h1_kernel(const mv::ComplexPair& pair) {
  // Snake-lemma bookkeeping for the comparison of the two restriction
  // complexes: with E = eps3 restricted to ker(dQ), the induced map
  // coker(nu1) -> coker(E) has kernel of dimension
  //   m1 - n1 - rank([phi_upstream | E]) + rank(E),
  // computed over the exact rationals (integer ranks agree).
  IntMatrix restricted = pair.eps3 * kernel_basis(pair.dQ);
  std::size_t joint = rank(hcat(pair.phi_upstream, restricted));
  std::size_t e_rank = rank(restricted);
  std::size_t m1 = pair.nu1.rows();
  std::size_t n1 = pair.nu1.cols();
  return m1 - n1 - (joint - e_rank);
}

ValidationError::ValidationError(config::ValidationReport r)
    : std::runtime_error("configuration failed validation (" +
                         std::to_string(r.violations.size()) +
                         " violation(s))"),
      report(std::move(r)) {}

CriterionReport full_verdict(const config::GluingConfiguration& cfg,
                             bool normalization_finite_dimensional) {
  config::ValidationReport validation = config::validate(cfg);
  if (!validation.valid()) throw ValidationError(std::move(validation));

  CriterionReport rep;
  rep.counts = config::counts(cfg);
  mv::ComplexPair pair = mv::build_complexes(cfg);

  NumericalCriterion ineq = numerical_criterion(rep.counts);
  rep.inequality_lhs = ineq.lhs;
  rep.inequality_rhs = ineq.rhs;
  rep.inequality_holds = ineq.holds;
  rep.generation_holds = generation_check(pair);
  if (rep.generation_holds)
    rep.sk1_coker_units_rank = sk1_coker_units_rank(pair);
  rep.structure_h1_kernel = structure_sheaf_h1_kernel(pair);
  rep.verdict = rep.generation_holds && normalization_finite_dimensional
                    ? Verdict::FiniteDimensional
                    : Verdict::NotEstablished;

  auto num = [](auto v) { return static_cast<long long>(v); };
  rep.paper_trace = {
      {"Theorem 3", "m1 - m2", ineq.lhs},
      {"Theorem 3", "n1 - n2 + n3", ineq.rhs},
      {"Theorem 3", "inequality holds", ineq.holds},
      {"Lemma 4", "h0(Q) free rank n2 - n3", num(mv::h0_Q_rank(pair))},
      {"Lemma 9", "h0 kernel rank, downstream",
       num(mv::h0_kernel_rank(pair, mv::Side::Downstream))},
      {"Lemma 9", "h0 kernel rank, upstream",
       num(mv::h0_kernel_rank(pair, mv::Side::Upstream))},
      {"Lemma 2", "comparison diagram commutes",
       mv::check_commutativity(pair)},
      {"Lemma 7", "integral generation", rep.generation_holds},
  };
  Sk1Presentation down = sk1_presentation(pair, mv::Side::Downstream);
  Sk1Presentation up = sk1_presentation(pair, mv::Side::Upstream);
  rep.paper_trace.push_back(
      {"Proposition 1", "SK1 coefficient-part rank, downstream",
       num(down.k2_part_rank)});
  rep.paper_trace.push_back(
      {"Proposition 1", "SK1 units-part rank, downstream",
       num(down.units_part_rank)});
  rep.paper_trace.push_back(
      {"Proposition 1", "SK1 coefficient-part rank, upstream",
       num(up.k2_part_rank)});
  rep.paper_trace.push_back({"Proposition 1", "SK1 units-part rank, upstream",
                             num(up.units_part_rank)});
  if (rep.sk1_coker_units_rank)
    rep.paper_trace.push_back({"Lemma 10", "SK1 cokernel free unit rank",
                               num(*rep.sk1_coker_units_rank)});
  rep.paper_trace.push_back({"Proposition 2", "structure-sheaf h1 kernel",
                             num(rep.structure_h1_kernel)});
  rep.paper_trace.push_back(
      {"Theorem 1", "verdict: finite dimensional",
       rep.verdict == Verdict::FiniteDimensional});
  return rep;
}

std::string to_json(const CriterionReport& rep) {
  nlohmann::ordered_json doc;
  doc["counts"] = {{"n1", rep.counts.n1},
                   {"n2", rep.counts.n2},
                   {"n3", rep.counts.n3},
                   {"m1", rep.counts.m1},
                   {"m2", rep.counts.m2}};
  doc["inequality_lhs"] = rep.inequality_lhs;
  doc["inequality_rhs"] = rep.inequality_rhs;
  doc["inequality_holds"] = rep.inequality_holds;
  doc["generation_holds"] = rep.generation_holds;
  if (rep.sk1_coker_units_rank)
    doc["sk1_coker_units_rank"] = *rep.sk1_coker_units_rank;
  else
    doc["sk1_coker_units_rank"] = nullptr;
  doc["structure_h1_kernel"] = rep.structure_h1_kernel;
  doc["verdict"] = rep.verdict == Verdict::FiniteDimensional
                       ? "FiniteDimensional"
                       : "NotEstablished";
  doc["paper_trace"] = nlohmann::ordered_json::array();
  for (const TraceEntry& t : rep.paper_trace) {
    nlohmann::ordered_json row = {t.tag, t.quantity};
    if (std::holds_alternative<bool>(t.value))
      row.push_back(std::get<bool>(t.value));
    else
      row.push_back(std::get<long long>(t.value));
    doc["paper_trace"].push_back(std::move(row));
  }
  return doc.dump(2) + "\n";
}

std::string to_text(const CriterionReport& rep) {
  std::ostringstream os;
  os << "counts: n1=" << rep.counts.n1 << " n2=" << rep.counts.n2
     << " n3=" << rep.counts.n3 << " m1=" << rep.counts.m1
     << " m2=" << rep.counts.m2 << "\n";
  os << "inequality: " << rep.inequality_lhs << " >= " << rep.inequality_rhs
     << " : " << (rep.inequality_holds ? "holds" : "fails") << "\n";
  os << "generation: " << (rep.generation_holds ? "holds" : "fails") << "\n";
  if (rep.sk1_coker_units_rank)
    os << "sk1 cokernel units rank: " << *rep.sk1_coker_units_rank << "\n";
  os << "structure-sheaf h1 kernel: " << rep.structure_h1_kernel << "\n";
  os << "verdict: "
     << (rep.verdict == Verdict::FiniteDimensional ? "FiniteDimensional"
                                                   : "NotEstablished")
     << "\n";
  os << "trace:\n";
  for (const TraceEntry& t : rep.paper_trace) {
    os << "  [" << t.tag << "] " << t.quantity << " = ";
    if (std::holds_alternative<bool>(t.value))
      os << (std::get<bool>(t.value) ? "true" : "false");
    else
      os << std::get<long long>(t.value);
    os << "\n";
  }
  return os.str();
}

}  // namespace zerocyc::criteria
