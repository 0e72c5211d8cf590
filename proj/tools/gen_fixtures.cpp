// Regenerates the bundled fixture files from the intersection-table data.
// Run from the repository root:  gen_fixtures [output-dir]
//
// The paper-table fixtures encode, for each glued point, which sheet
// branches are identified; the downstream component labels for the Mumford
// configuration are the unique relabeling that reproduces its published
// downstream intersection table (see tests/test_catalog.cpp for the search
// that certifies uniqueness).

#include "zerocyc/config.hpp"
#include "zerocyc/config_io.hpp"

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

using zerocyc::config::BranchRef;
using zerocyc::config::GluingConfiguration;
using zerocyc::config::Slot;

namespace {

struct Builder {
  GluingConfiguration cfg;

  explicit Builder(std::string name) { cfg.name = std::move(name); }

  Builder& component(const std::string& id, const std::string& label = "") {
    cfg.upstream_components.push_back({id, label});
    return *this;
  }
  Builder& point(const std::string& id, const std::string& label,
                 const std::string& a, const std::string& b) {
    cfg.upstream_points.push_back({id, label, a, b});
    return *this;
  }
  Builder& map(const std::string& up, const std::string& down) {
    cfg.component_map.emplace(up, down);
    return *this;
  }
  Builder& block(const std::string& label,
                 const std::vector<std::string>& points) {
    cfg.point_blocks.push_back({label, points});
    return *this;
  }
  Builder& cls(const std::vector<std::pair<std::string, char>>& branches) {
    std::vector<BranchRef> c;
    for (const auto& [point, slot] : branches)
      c.push_back({point, slot == 'a' ? Slot::A : Slot::B});
    cfg.branch_classes.push_back(std::move(c));
    return *this;
  }
  /// Identity gluing: every point its own block, every branch its own class.
  Builder& identity_gluing() {
    for (const auto& c : cfg.upstream_components) map(c.id, c.id);
    for (const auto& p : cfg.upstream_points) {
      block(p.id, {p.id});
      cls({{p.id, 'a'}});
      cls({{p.id, 'b'}});
    }
    return *this;
  }
};

GluingConfiguration mumford() {
  Builder b("mumford");
  // Exceptional curves over the seven rational points and proper transforms
  // of the seven rational lines; E(lmn) pairs with C(lmn) sheet-wise.
  const char* comps[14][2] = {
      {"E(001)", "Z1'"}, {"E(100)", "Z2'"}, {"E(110)", "Z3'"},
      {"E(111)", "Z4'"}, {"E(011)", "Z5'"}, {"E(101)", "Z6'"},
      {"E(010)", "Z7'"}, {"C(110)", "Z8'"}, {"C(100)", "Z9'"},
      {"C(010)", "Z10'"}, {"C(001)", "Z11'"}, {"C(101)", "Z12'"},
      {"C(011)", "Z13'"}, {"C(111)", "Z14'"}};
  for (const auto& c : comps) b.component(c[0], c[1]);

  struct P {
    const char* id;
    const char* label;
    const char* e;
    const char* c;
  };
  const P points[] = {
      {"a1", "a", "E(001)", "C(110)"}, {"a2", "a", "E(001)", "C(010)"},
      {"a3", "a", "E(110)", "C(110)"}, {"b1", "b", "E(001)", "C(100)"},
      {"b2", "b", "E(100)", "C(001)"}, {"b3", "b", "E(111)", "C(110)"},
      {"c1", "c", "E(110)", "C(001)"}, {"c2", "c", "E(111)", "C(011)"},
      {"c3", "c", "E(101)", "C(010)"}, {"d1", "d", "E(100)", "C(010)"},
      {"d2", "d", "E(110)", "C(111)"}, {"d3", "d", "E(010)", "C(100)"},
      {"e1", "e", "E(111)", "C(101)"}, {"e2", "e", "E(011)", "C(111)"},
      {"e3", "e", "E(010)", "C(001)"}, {"f1", "f", "E(011)", "C(011)"},
      {"f2", "f", "E(101)", "C(111)"}, {"f3", "f", "E(010)", "C(101)"},
      {"g1", "g", "E(100)", "C(011)"}, {"g2", "g", "E(011)", "C(100)"},
      {"g3", "g", "E(101)", "C(101)"}};
  for (const P& p : points) b.point(p.id, p.label, p.e, p.c);

  // Downstream labels: the unique relabeling of the sheet pairs that
  // reproduces the published downstream table, including its double entry
  // and the node on Z7.
  b.map("E(001)", "Z7").map("C(110)", "Z7");
  b.map("E(100)", "Z4").map("C(100)", "Z4");
  b.map("E(110)", "Z2").map("C(010)", "Z2");
  b.map("E(111)", "Z3").map("C(001)", "Z3");
  b.map("E(011)", "Z1").map("C(101)", "Z1");
  b.map("E(101)", "Z5").map("C(011)", "Z5");
  b.map("E(010)", "Z6").map("C(111)", "Z6");

  for (char blk : {'a', 'b', 'c', 'd', 'e', 'f', 'g'}) {
    std::string l(1, blk);
    b.block(l, {l + "1", l + "2", l + "3"});
  }
  // Each class glues an E-branch to the partner C-branch at another point
  // of the same block.
  b.cls({{"a1", 'a'}, {"a3", 'b'}})
      .cls({{"a1", 'b'}, {"a2", 'a'}})
      .cls({{"a2", 'b'}, {"a3", 'a'}});
  b.cls({{"b1", 'a'}, {"b3", 'b'}})
      .cls({{"b1", 'b'}, {"b2", 'a'}})
      .cls({{"b2", 'b'}, {"b3", 'a'}});
  b.cls({{"c1", 'a'}, {"c3", 'b'}})
      .cls({{"c1", 'b'}, {"c2", 'a'}})
      .cls({{"c2", 'b'}, {"c3", 'a'}});
  b.cls({{"d1", 'a'}, {"d3", 'b'}})
      .cls({{"d1", 'b'}, {"d2", 'a'}})
      .cls({{"d2", 'b'}, {"d3", 'a'}});
  b.cls({{"e1", 'a'}, {"e3", 'b'}})
      .cls({{"e1", 'b'}, {"e2", 'a'}})
      .cls({{"e2", 'b'}, {"e3", 'a'}});
  b.cls({{"f1", 'a'}, {"f3", 'b'}})
      .cls({{"f1", 'b'}, {"f2", 'a'}})
      .cls({{"f2", 'b'}, {"f3", 'a'}});
  b.cls({{"g1", 'a'}, {"g2", 'b'}})
      .cls({{"g1", 'b'}, {"g3", 'a'}})
      .cls({{"g2", 'a'}, {"g3", 'b'}});
  return b.cfg;
}

Builder kato_ishida_base(const std::string& name) {
  Builder b(name);
  for (int i = 1; i <= 14; ++i) {
    char id[8], label[8];
    std::snprintf(id, sizeof id, "Z%02d", i);
    std::snprintf(label, sizeof label, "Z%d'", i);
    b.component(id, label);
  }
  for (int i = 1; i <= 7; ++i) {
    char up[8], partner[8], down[8];
    std::snprintf(up, sizeof up, "Z%02d", i);
    std::snprintf(partner, sizeof partner, "Z%02d", i + 7);
    std::snprintf(down, sizeof down, "Z%d", i);
    b.map(up, down).map(partner, down);
  }
  return b;
}

struct KPoint {
  const char* id;
  const char* label;
  int row;  // 1..7
  int col;  // 8..14
};

void add_k_points(Builder& b, const std::vector<KPoint>& points) {
  for (const KPoint& p : points) {
    char ra[8], cb[8];
    std::snprintf(ra, sizeof ra, "Z%02d", p.row);
    std::snprintf(cb, sizeof cb, "Z%02d", p.col);
    b.point(p.id, p.label, ra, cb);
  }
  for (char blk : {'a', 'b', 'c', 'd', 'e', 'f', 'g'}) {
    std::string l(1, blk);
    b.block(l, {l + "1", l + "2", l + "3"});
  }
}

GluingConfiguration kato_ishida_1() {
  Builder b = kato_ishida_base("kato-ishida-1");
  add_k_points(b, {{"a1", "a", 3, 11}, {"a2", "a", 4, 12}, {"a3", "a", 5, 10},
                   {"b1", "b", 2, 14}, {"b2", "b", 6, 9},  {"b3", "b", 7, 13},
                   {"c1", "c", 2, 13}, {"c2", "c", 4, 9},  {"c3", "c", 6, 11},
                   {"d1", "d", 2, 11}, {"d2", "d", 4, 14}, {"d3", "d", 7, 9},
                   {"e1", "e", 1, 12}, {"e2", "e", 5, 13}, {"e3", "e", 6, 8},
                   {"f1", "f", 1, 10}, {"f2", "f", 3, 12}, {"f3", "f", 5, 8},
                   {"g1", "g", 1, 14}, {"g2", "g", 3, 8},  {"g3", "g", 7, 10}});
  b.cls({{"a1", 'a'}, {"a3", 'b'}})
      .cls({{"a1", 'b'}, {"a2", 'a'}})
      .cls({{"a2", 'b'}, {"a3", 'a'}});
  b.cls({{"b1", 'a'}, {"b2", 'b'}})
      .cls({{"b1", 'b'}, {"b3", 'a'}})
      .cls({{"b2", 'a'}, {"b3", 'b'}});
  b.cls({{"c1", 'a'}, {"c2", 'b'}})
      .cls({{"c1", 'b'}, {"c3", 'a'}})
      .cls({{"c2", 'a'}, {"c3", 'b'}});
  b.cls({{"d1", 'a'}, {"d3", 'b'}})
      .cls({{"d1", 'b'}, {"d2", 'a'}})
      .cls({{"d2", 'b'}, {"d3", 'a'}});
  b.cls({{"e1", 'a'}, {"e3", 'b'}})
      .cls({{"e1", 'b'}, {"e2", 'a'}})
      .cls({{"e2", 'b'}, {"e3", 'a'}});
  b.cls({{"f1", 'a'}, {"f3", 'b'}})
      .cls({{"f1", 'b'}, {"f2", 'a'}})
      .cls({{"f2", 'b'}, {"f3", 'a'}});
  b.cls({{"g1", 'a'}, {"g2", 'b'}})
      .cls({{"g1", 'b'}, {"g3", 'a'}})
      .cls({{"g2", 'a'}, {"g3", 'b'}});
  return b.cfg;
}

GluingConfiguration kato_ishida_2() {
  Builder b = kato_ishida_base("kato-ishida-2");
  add_k_points(b, {{"a1", "a", 3, 11}, {"a2", "a", 4, 12}, {"a3", "a", 5, 10},
                   {"b1", "b", 2, 9},  {"b2", "b", 2, 10}, {"b3", "b", 3, 9},
                   {"c1", "c", 2, 13}, {"c2", "c", 6, 14}, {"c3", "c", 7, 9},
                   {"d1", "d", 4, 13}, {"d2", "d", 6, 11}, {"d3", "d", 6, 13},
                   {"e1", "e", 1, 10}, {"e2", "e", 3, 12}, {"e3", "e", 5, 8},
                   {"f1", "f", 1, 14}, {"f2", "f", 7, 8},  {"f3", "f", 7, 14},
                   {"g1", "g", 1, 12}, {"g2", "g", 4, 8},  {"g3", "g", 5, 11}});
  b.cls({{"a1", 'a'}, {"a3", 'b'}})
      .cls({{"a1", 'b'}, {"a2", 'a'}})
      .cls({{"a2", 'b'}, {"a3", 'a'}});
  b.cls({{"b1", 'a'}, {"b3", 'b'}})
      .cls({{"b1", 'b'}, {"b2", 'a'}})
      .cls({{"b2", 'b'}, {"b3", 'a'}});
  b.cls({{"c1", 'a'}, {"c3", 'b'}})
      .cls({{"c1", 'b'}, {"c2", 'a'}})
      .cls({{"c2", 'b'}, {"c3", 'a'}});
  b.cls({{"d1", 'a'}, {"d2", 'b'}})
      .cls({{"d3", 'a'}, {"d1", 'b'}})
      .cls({{"d2", 'a'}, {"d3", 'b'}});
  b.cls({{"e1", 'a'}, {"e3", 'b'}})
      .cls({{"e1", 'b'}, {"e2", 'a'}})
      .cls({{"e2", 'b'}, {"e3", 'a'}});
  b.cls({{"f1", 'a'}, {"f2", 'b'}})
      .cls({{"f3", 'a'}, {"f1", 'b'}})
      .cls({{"f2", 'a'}, {"f3", 'b'}});
  b.cls({{"g1", 'a'}, {"g2", 'b'}})
      .cls({{"g1", 'b'}, {"g3", 'a'}})
      .cls({{"g2", 'a'}, {"g3", 'b'}});
  return b.cfg;
}

GluingConfiguration two_lines() {
  Builder b("two-lines");
  b.component("L1").component("L2").point("p", "", "L1", "L2");
  return b.identity_gluing().cfg;
}

GluingConfiguration triangle() {
  Builder b("triangle");
  b.component("L1").component("L2").component("L3");
  b.point("p12", "", "L1", "L2")
      .point("p13", "", "L1", "L3")
      .point("p23", "", "L2", "L3");
  return b.identity_gluing().cfg;
}

GluingConfiguration square() {
  Builder b("square");
  for (int i = 1; i <= 4; ++i) b.component("L" + std::to_string(i));
  b.point("p12", "", "L1", "L2")
      .point("p23", "", "L2", "L3")
      .point("p34", "", "L3", "L4")
      .point("p14", "", "L1", "L4");
  return b.identity_gluing().cfg;
}

GluingConfiguration star() {
  Builder b("star");
  b.component("H").component("S1").component("S2").component("S3");
  b.point("q1", "", "H", "S1")
      .point("q2", "", "H", "S2")
      .point("q3", "", "H", "S3");
  return b.identity_gluing().cfg;
}

GluingConfiguration bigon() {
  Builder b("bigon");
  b.component("L1").component("L2");
  b.point("p", "", "L1", "L2").point("q", "", "L1", "L2");
  return b.identity_gluing().cfg;
}

GluingConfiguration two_triangles() {
  Builder b("two-triangles");
  for (const char* c : {"A1", "A2", "A3", "B1", "B2", "B3"}) b.component(c);
  b.point("a12", "", "A1", "A2")
      .point("a13", "", "A1", "A3")
      .point("a23", "", "A2", "A3")
      .point("b12", "", "B1", "B2")
      .point("b13", "", "B1", "B3")
      .point("b23", "", "B2", "B3");
  return b.identity_gluing().cfg;
}

GluingConfiguration node() {
  Builder b("node");
  b.component("L1").component("L2").point("p", "", "L1", "L2");
  b.map("L1", "N1").map("L2", "N1");
  b.block("p", {"p"}).cls({{"p", 'a'}}).cls({{"p", 'b'}});
  return b.cfg;
}

GluingConfiguration double_node() {
  Builder b("double-node");
  b.component("L1").component("L2");
  b.point("p", "", "L1", "L2").point("q", "", "L1", "L2");
  b.map("L1", "N1").map("L2", "N1");
  b.block("p", {"p"}).block("q", {"q"});
  b.cls({{"p", 'a'}}).cls({{"p", 'b'}}).cls({{"q", 'a'}}).cls({{"q", 'b'}});
  return b.cfg;
}

GluingConfiguration double_sheet() {
  Builder b("double-sheet");
  for (const char* c : {"A", "B", "C", "D"}) b.component(c);
  b.point("p", "", "A", "C").point("q", "", "B", "D");
  b.map("A", "X").map("B", "X").map("C", "Y").map("D", "Y");
  b.block("m", {"p", "q"});
  b.cls({{"p", 'a'}, {"q", 'a'}}).cls({{"p", 'b'}, {"q", 'b'}});
  return b.cfg;
}

GluingConfiguration triple_point() {
  Builder b("triple-point");
  for (const char* c : {"A", "B", "C", "D"}) b.component(c);
  b.point("p", "", "A", "B").point("q", "", "C", "D");
  b.map("A", "X").map("B", "Y").map("C", "Y").map("D", "Z");
  b.block("t", {"p", "q"});
  b.cls({{"p", 'a'}}).cls({{"p", 'b'}, {"q", 'a'}}).cls({{"q", 'b'}});
  return b.cfg;
}

GluingConfiguration collapsed_triangle() {
  Builder b("collapsed-triangle");
  b.component("L1").component("L2").component("L3");
  b.point("p12", "", "L1", "L2")
      .point("p13", "", "L1", "L3")
      .point("p23", "", "L2", "L3");
  b.map("L1", "X1").map("L2", "X1").map("L3", "X2");
  for (const char* p : {"p12", "p13", "p23"}) {
    b.block(p, {p});
    b.cls({{p, 'a'}}).cls({{p, 'b'}});
  }
  return b.cfg;
}

GluingConfiguration folded_square() {
  Builder b("folded-square");
  for (int i = 1; i <= 4; ++i) b.component("L" + std::to_string(i));
  b.point("p12", "", "L1", "L2")
      .point("p23", "", "L2", "L3")
      .point("p34", "", "L3", "L4")
      .point("p14", "", "L1", "L4");
  b.map("L1", "A").map("L3", "A").map("L2", "B").map("L4", "B");
  b.block("m", {"p12", "p34"}).block("p14", {"p14"}).block("p23", {"p23"});
  b.cls({{"p12", 'a'}, {"p34", 'a'}}).cls({{"p12", 'b'}, {"p34", 'b'}});
  b.cls({{"p14", 'a'}}).cls({{"p14", 'b'}});
  b.cls({{"p23", 'a'}}).cls({{"p23", 'b'}});
  return b.cfg;
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "fixtures";
  const std::vector<GluingConfiguration> all = {
      mumford(),        kato_ishida_1(),  kato_ishida_2(), two_lines(),
      triangle(),       square(),         star(),          bigon(),
      two_triangles(),  node(),           double_node(),   double_sheet(),
      triple_point(),   collapsed_triangle(), folded_square()};
  for (const GluingConfiguration& cfg : all) {
    std::string path = dir + "/" + cfg.name + ".json";
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << path << "\n";
      return 1;
    }
    out << zerocyc::config::serialize(cfg);
    std::cout << "wrote " << path << "\n";
  }
  return 0;
}
