#pragma once

#include "zerocyc/config.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace zerocyc::catalog {

/// A bundled configuration plus the frozen values it is expected to
/// reproduce. Fixtures live as JSON files (one per name) in the fixtures
/// directory; the expected values live here.
struct Fixture {
  std::string name;
  std::string source;
  config::GluingConfiguration config;
  config::Counts expected_counts;
  bool expected_inequality = false;
  bool expected_generation = false;
  std::vector<std::string> expected_nodal_components;
};

struct UnknownFixture : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Sorted fixture names.
const std::vector<std::string>& fixture_names();

/// Directory the fixture files are loaded from: $ZEROCYC_FIXTURES_DIR if
/// set, otherwise the build-time default.
std::string default_fixtures_dir();

Fixture get_fixture(const std::string& name);
Fixture get_fixture(const std::string& name, const std::string& dir);

struct FixtureSummary {
  std::string name;
  std::string source;
  config::Counts counts;
};

/// Stable (name-sorted) listing.
std::vector<FixtureSummary> list_fixtures();

}  // namespace zerocyc::catalog
