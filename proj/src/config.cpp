#include "zerocyc/config.hpp"
#include "zerocyc/layout.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace zerocyc::config {

namespace {

struct Resolver {
  const GluingConfiguration& cfg;
  std::map<std::string, std::size_t> comp_by_id;
  std::map<std::string, std::size_t> point_by_id;

  explicit Resolver(const GluingConfiguration& c) : cfg(c) {
    for (std::size_t i = 0; i < c.upstream_components.size(); ++i)
      comp_by_id.emplace(c.upstream_components[i].id, i);
    for (std::size_t i = 0; i < c.upstream_points.size(); ++i)
      point_by_id.emplace(c.upstream_points[i].id, i);
  }

  const std::string& branch_component(const BranchRef& b) const {
    const UpstreamPoint& p = cfg.upstream_points.at(point_by_id.at(b.point));
    return b.slot == Slot::A ? p.branch_a : p.branch_b;
  }

  const std::string& image(const std::string& comp_id) const {
    return cfg.component_map.at(comp_id);
  }
};

// Disjoint-set connectivity for the warning checks.
struct Dsu {
  std::vector<std::size_t> parent;
  explicit Dsu(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
  std::size_t groups() {
    std::set<std::size_t> roots;
    for (std::size_t i = 0; i < parent.size(); ++i) roots.insert(find(i));
    return roots.size();
  }
};

}  // namespace

ValidationReport validate(const GluingConfiguration& cfg) {
  ValidationReport report;
  Resolver r(cfg);
  auto violation = [&](const std::string& msg) {
    report.violations.push_back({msg});
  };

  for (const UpstreamPoint& p : cfg.upstream_points)
    if (p.branch_a == p.branch_b)
      violation("point '" + p.id + "' lies on a single component '" +
                p.branch_a +
                "'; upstream points must be transversal intersections of two "
                "distinct components");

  // Where does each branch live, and in which block is its point?
  std::map<std::string, std::size_t> block_of_point;
  for (std::size_t b = 0; b < cfg.point_blocks.size(); ++b)
    for (const std::string& pid : cfg.point_blocks[b].points)
      block_of_point.emplace(pid, b);

  std::map<BranchRef, std::size_t> class_of_branch;
  for (std::size_t c = 0; c < cfg.branch_classes.size(); ++c)
    for (const BranchRef& b : cfg.branch_classes[c])
      class_of_branch.emplace(b, c);

  for (std::size_t c = 0; c < cfg.branch_classes.size(); ++c) {
    const auto& cls = cfg.branch_classes[c];
    if (cls.empty()) continue;
    std::set<std::string> images;
    std::set<std::size_t> blocks;
    for (const BranchRef& b : cls) {
      images.insert(r.image(r.branch_component(b)));
      blocks.insert(block_of_point.at(b.point));
    }
    if (images.size() > 1) {
      std::ostringstream os;
      os << "branch class " << c
         << " mixes branches over distinct downstream components:";
      for (const auto& im : images) os << " '" << im << "'";
      violation(os.str());
    }
    if (blocks.size() > 1)
      violation("branch class " + std::to_string(c) +
                " crosses point blocks; classes must refine the point "
                "partition");
  }

  for (const UpstreamPoint& p : cfg.upstream_points) {
    BranchRef ba{p.id, Slot::A}, bb{p.id, Slot::B};
    if (class_of_branch.at(ba) == class_of_branch.at(bb))
      violation("the two branches of point '" + p.id +
                "' lie in the same branch class; a glued point must keep its "
                "two local branches distinct");
  }

  for (const PointBlock& block : cfg.point_blocks) {
    std::set<std::size_t> classes;
    for (const std::string& pid : block.points) {
      classes.insert(class_of_branch.at({pid, Slot::A}));
      classes.insert(class_of_branch.at({pid, Slot::B}));
    }
    if (classes.size() > 3)
      violation("point block '" + block.label + "' yields " +
                std::to_string(classes.size()) +
                " branch classes; at most 3 components may pass through a "
                "point of Z");
  }

  if (!report.violations.empty()) return report;

  // Connectivity warnings. Verdict-level rank claims (kernel rank 1) assume
  // connected configurations on both sides.
  if (!cfg.upstream_components.empty()) {
    Dsu up(cfg.upstream_components.size());
    for (const UpstreamPoint& p : cfg.upstream_points)
      up.unite(r.comp_by_id.at(p.branch_a), r.comp_by_id.at(p.branch_b));
    if (up.groups() > 1)
      report.warnings.push_back("upstream configuration is disconnected (" +
                                std::to_string(up.groups()) + " components)");
  }
  std::vector<std::string> down = downstream_components(cfg);
  if (!down.empty()) {
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < down.size(); ++i) idx.emplace(down[i], i);
    Dsu dn(down.size());
    for (const PointBlock& block : cfg.point_blocks) {
      std::set<std::size_t> comps;
      for (const std::string& pid : block.points) {
        const UpstreamPoint& p =
            cfg.upstream_points.at(r.point_by_id.at(pid));
        comps.insert(idx.at(r.image(p.branch_a)));
        comps.insert(idx.at(r.image(p.branch_b)));
      }
      auto it = comps.begin();
      for (auto jt = std::next(it); jt != comps.end(); ++jt) dn.unite(*it, *jt);
    }
    if (dn.groups() > 1)
      report.warnings.push_back("downstream configuration is disconnected (" +
                                std::to_string(dn.groups()) + " components)");
  }
  return report;
}

std::vector<std::string> downstream_components(const GluingConfiguration& cfg) {
  std::set<std::string> names;
  for (const auto& [up, down] : cfg.component_map) names.insert(down);
  return {names.begin(), names.end()};
}

Layout analyze(const GluingConfiguration& cfg) {
  Layout lay;
  Resolver r(cfg);

  lay.down_names = downstream_components(cfg);
  for (std::size_t i = 0; i < lay.down_names.size(); ++i)
    lay.down_index.emplace(lay.down_names[i], i);

  for (const UpstreamComponent& c : cfg.upstream_components)
    lay.up_names.push_back(c.id);
  std::sort(lay.up_names.begin(), lay.up_names.end());
  for (std::size_t i = 0; i < lay.up_names.size(); ++i)
    lay.up_index.emplace(lay.up_names[i], i);
  lay.up_image.resize(lay.up_names.size());
  for (std::size_t i = 0; i < lay.up_names.size(); ++i)
    lay.up_image[i] = lay.down_index.at(r.image(lay.up_names[i]));

  // Blocks in label order, classes within a block by (component, key).
  std::map<BranchRef, std::size_t> class_of_branch;
  for (std::size_t c = 0; c < cfg.branch_classes.size(); ++c)
    for (const BranchRef& b : cfg.branch_classes[c])
      class_of_branch.emplace(b, c);

  std::vector<std::size_t> block_order(cfg.point_blocks.size());
  std::iota(block_order.begin(), block_order.end(), 0);
  std::sort(block_order.begin(), block_order.end(),
            [&](std::size_t a, std::size_t b) {
              return cfg.point_blocks[a].label < cfg.point_blocks[b].label;
            });

  std::map<std::size_t, std::pair<std::size_t, std::size_t>> class_position;
  for (std::size_t bi : block_order) {
    const PointBlock& block = cfg.point_blocks[bi];
    Layout::BlockInfo info;
    info.label = block.label;
    std::set<std::size_t> class_ids;
    for (const std::string& pid : block.points) {
      info.cfg_points.push_back(r.point_by_id.at(pid));
      class_ids.insert(class_of_branch.at({pid, Slot::A}));
      class_ids.insert(class_of_branch.at({pid, Slot::B}));
    }
    for (std::size_t cid : class_ids) {
      Layout::ClassInfo ci;
      ci.cfg_class = cid;
      ci.key = *std::min_element(cfg.branch_classes[cid].begin(),
                                 cfg.branch_classes[cid].end());
      ci.down_comp =
          lay.down_index.at(r.image(r.branch_component(ci.key)));
      info.classes.push_back(ci);
    }
    std::sort(info.classes.begin(), info.classes.end(),
              [](const Layout::ClassInfo& a, const Layout::ClassInfo& b) {
                return std::tie(a.down_comp, a.key) <
                       std::tie(b.down_comp, b.key);
              });
    for (std::size_t pos = 0; pos < info.classes.size(); ++pos)
      class_position[info.classes[pos].cfg_class] = {lay.blocks.size(), pos};
    lay.blocks.push_back(std::move(info));
  }

  // Canonical point order: (block label, point id).
  struct PointKey {
    std::string block_label, id;
    std::size_t cfg_index;
  };
  std::vector<PointKey> keys;
  for (std::size_t b = 0; b < lay.blocks.size(); ++b)
    for (std::size_t cfg_index : lay.blocks[b].cfg_points)
      keys.push_back({lay.blocks[b].label,
                      cfg.upstream_points[cfg_index].id, cfg_index});
  std::sort(keys.begin(), keys.end(), [](const PointKey& a, const PointKey& b) {
    return std::tie(a.block_label, a.id) < std::tie(b.block_label, b.id);
  });
  for (const PointKey& k : keys) {
    const UpstreamPoint& p = cfg.upstream_points[k.cfg_index];
    Layout::PointInfo info;
    info.id = p.id;
    auto [blk_a, pos_a] = class_position.at(class_of_branch.at({p.id, Slot::A}));
    auto [blk_b, pos_b] = class_position.at(class_of_branch.at({p.id, Slot::B}));
    info.block = blk_a;  // equal to blk_b: classes refine blocks
    info.comp_a = lay.up_index.at(p.branch_a);
    info.comp_b = lay.up_index.at(p.branch_b);
    info.class_a = pos_a;
    info.class_b = pos_b;
    const auto& classes = lay.blocks[info.block].classes;
    info.node_pair =
        classes[pos_a].down_comp == classes[pos_b].down_comp;
    if (info.node_pair) ++lay.node_pair_count;
    lay.points.push_back(std::move(info));
  }

  // Entries and triples per block; classes are already sorted by component,
  // so in-order enumeration is canonical.
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t>
      entry_index;
  for (std::size_t b = 0; b < lay.blocks.size(); ++b) {
    const auto& classes = lay.blocks[b].classes;
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t j = i + 1; j < classes.size(); ++j) {
        if (classes[i].down_comp == classes[j].down_comp) continue;
        entry_index[{b, i, j}] = lay.entries.size();
        lay.entries.push_back(
            {b, classes[i].down_comp, classes[j].down_comp, i, j});
      }
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t j = i + 1; j < classes.size(); ++j)
        for (std::size_t k = j + 1; k < classes.size(); ++k) {
          if (classes[i].down_comp == classes[j].down_comp ||
              classes[i].down_comp == classes[k].down_comp ||
              classes[j].down_comp == classes[k].down_comp)
            continue;
          Layout::Triple t;
          t.block = b;
          t.comps[0] = classes[i].down_comp;
          t.comps[1] = classes[j].down_comp;
          t.comps[2] = classes[k].down_comp;
          t.classes[0] = i;
          t.classes[1] = j;
          t.classes[2] = k;
          lay.triples.push_back(t);
        }
  }

  lay.point_entry.resize(lay.points.size(), Layout::npos);
  for (std::size_t q = 0; q < lay.points.size(); ++q) {
    const auto& p = lay.points[q];
    if (p.node_pair) continue;
    auto lohi = std::minmax(p.class_a, p.class_b);
    lay.point_entry[q] = entry_index.at({p.block, lohi.first, lohi.second});
  }
  return lay;
}

std::string Layout::entry_label(std::size_t e,
                                const GluingConfiguration&) const {
  const Entry& en = entries[e];
  std::ostringstream os;
  os << blocks[en.block].label << ':' << down_names[en.comp_lo] << '*'
     << down_names[en.comp_hi];
  return os.str();
}

std::string Layout::triple_label(std::size_t t,
                                 const GluingConfiguration&) const {
  const Triple& tr = triples[t];
  std::ostringstream os;
  os << blocks[tr.block].label << ':' << down_names[tr.comps[0]] << '*'
     << down_names[tr.comps[1]] << '*' << down_names[tr.comps[2]];
  return os.str();
}

Counts counts(const GluingConfiguration& cfg) {
  Layout lay = analyze(cfg);
  Counts c;
  c.n1 = static_cast<long long>(lay.down_names.size());
  c.n2 = static_cast<long long>(lay.entries.size());
  c.n3 = static_cast<long long>(lay.triples.size());
  c.m1 = static_cast<long long>(cfg.upstream_components.size());
  c.m2 = static_cast<long long>(cfg.upstream_points.size());
  return c;
}

DownstreamView downstream_view(const GluingConfiguration& cfg) {
  Layout lay = analyze(cfg);
  DownstreamView view;
  std::set<std::string> nodal;
  for (const Layout::BlockInfo& block : lay.blocks) {
    DownstreamPoint pt;
    pt.label = block.label;
    std::map<std::size_t, int> mult;
    for (const Layout::ClassInfo& ci : block.classes) {
      pt.branch_components.push_back(lay.down_names[ci.down_comp]);
      if (++mult[ci.down_comp] == 2)
        nodal.insert(lay.down_names[ci.down_comp]);
    }
    std::sort(pt.branch_components.begin(), pt.branch_components.end());
    view.points.push_back(std::move(pt));
  }
  view.nodal_components.assign(nodal.begin(), nodal.end());
  return view;
}

}  // namespace zerocyc::config
