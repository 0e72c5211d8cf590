#pragma once

#include "zerocyc/config.hpp"

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace zerocyc::config {

/// Canonical index structure shared by the counting operations and the
/// complex builders. All orderings here are normative: downstream and
/// upstream components sort by name, points by (block label, point id),
/// entries by (point, component pair, class keys).
struct Layout {
  std::vector<std::string> down_names;
  std::map<std::string, std::size_t> down_index;

  std::vector<std::string> up_names;  // sorted upstream component ids
  std::map<std::string, std::size_t> up_index;
  std::vector<std::size_t> up_image;  // upstream index -> downstream index

  struct ClassInfo {
    std::size_t cfg_class;  // index into cfg.branch_classes
    std::size_t down_comp;
    BranchRef key;  // smallest branch; deterministic tiebreak
  };
  struct BlockInfo {
    std::string label;
    std::vector<std::size_t> cfg_points;  // indices into cfg.upstream_points
    std::vector<ClassInfo> classes;       // sorted by (down_comp, key)
  };
  std::vector<BlockInfo> blocks;  // sorted by label

  struct PointInfo {
    std::string id;
    std::size_t block;
    std::size_t comp_a, comp_b;    // upstream component indices
    std::size_t class_a, class_b;  // positions within blocks[block].classes
    bool node_pair;  // both branches glue to the same downstream component
  };
  std::vector<PointInfo> points;  // canonical row order of phi_upstream / eps3

  /// Unordered pair of branch classes on distinct downstream components;
  /// one coordinate of H0 of the downstream pairwise-intersection module.
  struct Entry {
    std::size_t block;
    std::size_t comp_lo, comp_hi;    // downstream indices, comp_lo < comp_hi
    std::size_t class_lo, class_hi;  // positions within the block's classes
  };
  std::vector<Entry> entries;

  /// Class triple on pairwise-distinct downstream components.
  struct Triple {
    std::size_t block;
    std::size_t comps[3];    // strictly increasing downstream indices
    std::size_t classes[3];  // positions within the block's classes
  };
  std::vector<Triple> triples;

  std::size_t node_pair_count = 0;

  /// Entry index for a point's class pair, or npos for a node pair.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> point_entry;

  std::string entry_label(std::size_t e, const GluingConfiguration& cfg) const;
  std::string triple_label(std::size_t t, const GluingConfiguration& cfg) const;
};

/// Pre: cfg passed validation.
Layout analyze(const GluingConfiguration& cfg);

}  // namespace zerocyc::config
