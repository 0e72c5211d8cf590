#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace zerocyc::config {

/// One smooth rational curve in the upstream configuration Z'.
struct UpstreamComponent {
  std::string id;
  std::string label;
};

/// A normal-crossings intersection point of Z': two distinct components
/// meet transversally, giving the point two branches (slots "a" and "b").
struct UpstreamPoint {
  std::string id;
  std::string label;
  std::string branch_a;  // component id
  std::string branch_b;  // component id
};

enum class Slot { A, B };

/// One branch of one upstream point.
struct BranchRef {
  std::string point;
  Slot slot = Slot::A;
  auto operator<=>(const BranchRef&) const = default;
};

/// Upstream points glued to a single downstream point.
struct PointBlock {
  std::string label;
  std::vector<std::string> points;
};

/// Upstream configuration Z' plus the identification datum producing the
/// downstream configuration Z. branch_classes partitions the set of all
/// branches and refines the point blocks; each class becomes one local
/// branch of the downstream curve.
struct GluingConfiguration {
  std::string name;
  std::vector<UpstreamComponent> upstream_components;
  std::vector<UpstreamPoint> upstream_points;
  std::map<std::string, std::string> component_map;  // upstream id -> downstream name
  std::vector<PointBlock> point_blocks;
  std::vector<std::vector<BranchRef>> branch_classes;

  bool operator==(const GluingConfiguration&) const = default;
};

/// The quintuple compared by the numerical criterion: components and
/// intersection points downstream (n1, n2, n3) and upstream (m1, m2).
struct Counts {
  long long n1 = 0;  // downstream components
  long long n2 = 0;  // downstream two-fold incidences (branch pairs on distinct components)
  long long n3 = 0;  // downstream three-fold incidences (pairwise-distinct triples)
  long long m1 = 0;  // upstream components
  long long m2 = 0;  // upstream points
  bool operator==(const Counts&) const = default;
};

struct Violation {
  std::string message;
};

/// Violations break the model assumptions; warnings flag inputs that are
/// structurally fine but outside what the verdict-level operations assume
/// (currently: disconnected configurations).
struct ValidationReport {
  std::vector<Violation> violations;
  std::vector<std::string> warnings;
  bool valid() const { return violations.empty(); }
};

ValidationReport validate(const GluingConfiguration& cfg);

/// Pre: cfg is valid.
Counts counts(const GluingConfiguration& cfg);

/// A downstream point with its multiset of incident downstream components,
/// one entry per branch class of the block. A repeated component marks a
/// node of that component.
struct DownstreamPoint {
  std::string label;
  std::vector<std::string> branch_components;  // sorted, with multiplicity
};

struct DownstreamView {
  std::vector<DownstreamPoint> points;            // sorted by label
  std::vector<std::string> nodal_components;      // sorted downstream names
};

DownstreamView downstream_view(const GluingConfiguration& cfg);

/// Sorted distinct downstream component names (the canonical column order
/// of the downstream complexes).
std::vector<std::string> downstream_components(const GluingConfiguration& cfg);

}  // namespace zerocyc::config
