#include "zerocyc/catalog.hpp"

#include "zerocyc/config_io.hpp"

#include <cstdlib>
#include <map>

#ifndef ZEROCYC_DEFAULT_FIXTURES_DIR
#define ZEROCYC_DEFAULT_FIXTURES_DIR "fixtures"
#endif

namespace zerocyc::catalog {

namespace {

struct Expected {
  const char* source;
  config::Counts counts;
  bool inequality;
  bool generation;
  std::vector<std::string> nodal;
};

const std::map<std::string, Expected>& expected_table() {
  static const std::map<std::string, Expected> table = {
      {"bigon",
       {"synthetic: two lines through two points", {2, 2, 0, 2, 2}, true, true, {}}},
      {"collapsed-triangle",
       {"synthetic: triangle with two sides identified",
        {2, 2, 0, 3, 3},
        true,
        true,
        {"X1"}}},
      {"double-node",
       {"synthetic: two sheets glued at two self-intersections",
        {1, 0, 0, 2, 2},
        false,
        false,
        {"N1"}}},
      {"double-sheet",
       {"synthetic: two double-sheeted components through one point",
        {2, 1, 0, 4, 2},
        true,
        true,
        {}}},
      {"folded-square",
       {"synthetic: 4-cycle folded onto two components",
        {2, 3, 0, 4, 4},
        true,
        true,
        {}}},
      {"kato-ishida-1",
       {"Kato-Ishida fake projective plane (first): degenerate-fibre line "
        "configuration",
        {7, 21, 7, 14, 21},
        true,
        true,
        {}}},
      {"kato-ishida-2",
       {"Kato-Ishida fake projective plane (second): degenerate-fibre line "
        "configuration; experimental: the traced gluing yields nodal "
        "components although the planes are described as having none",
        {7, 18, 4, 14, 21},
        true,
        true,
        {"Z2", "Z6", "Z7"}}},
      {"mumford",
       {"Mumford fake projective plane: degenerate-fibre line configuration",
        {7, 20, 6, 14, 21},
        true,
        true,
        {"Z7"}}},
      {"node",
       {"synthetic: two sheets glued at one self-intersection",
        {1, 0, 0, 2, 1},
        true,
        true,
        {"N1"}}},
      {"square",
       {"synthetic: 4-cycle of lines", {4, 4, 0, 4, 4}, true, true, {}}},
      {"star",
       {"synthetic: hub line meeting three spokes",
        {4, 3, 0, 4, 3},
        true,
        true,
        {}}},
      {"triangle",
       {"synthetic: three lines in general position",
        {3, 3, 0, 3, 3},
        true,
        true,
        {}}},
      {"triple-point",
       {"synthetic: three components through one glued point",
        {3, 3, 1, 4, 2},
        true,
        true,
        {}}},
      {"two-lines",
       {"synthetic: two lines through one point", {2, 1, 0, 2, 1}, true, true, {}}},
      {"two-triangles",
       {"synthetic: disjoint union of two triangles",
        {6, 6, 0, 6, 6},
        true,
        true,
        {}}},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, e] : expected_table()) out.push_back(name);
    return out;
  }();
  return names;
}

std::string default_fixtures_dir() {
  if (const char* env = std::getenv("ZEROCYC_FIXTURES_DIR")) return env;
  return ZEROCYC_DEFAULT_FIXTURES_DIR;
}

Fixture get_fixture(const std::string& name, const std::string& dir) {
  auto it = expected_table().find(name);
  if (it == expected_table().end())
    throw UnknownFixture("unknown fixture '" + name + "'");
  Fixture f;
  f.name = name;
  f.source = it->second.source;
  f.config = config::load_configuration_file(dir + "/" + name + ".json");
  f.expected_counts = it->second.counts;
  f.expected_inequality = it->second.inequality;
  f.expected_generation = it->second.generation;
  f.expected_nodal_components = it->second.nodal;
  return f;
}

Fixture get_fixture(const std::string& name) {
  return get_fixture(name, default_fixtures_dir());
}

std::vector<FixtureSummary> list_fixtures() {
  std::vector<FixtureSummary> out;
  for (const auto& [name, e] : expected_table())
    out.push_back({name, e.source, e.counts});
  return out;
}

}  // namespace zerocyc::catalog
