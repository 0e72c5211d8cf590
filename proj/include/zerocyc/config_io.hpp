#pragma once

#include "zerocyc/config.hpp"

#include <stdexcept>
#include <string>

namespace zerocyc::config {

/// Parse or schema failure. Syntax errors carry the byte position reported
/// by the JSON parser; schema errors name the offending field or id.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parse a configuration document. The schema is strict: unknown fields are
/// rejected, all ids must resolve, point blocks must partition the points
/// and branch classes must partition the branches.
GluingConfiguration parse_configuration(const std::string& text);

GluingConfiguration load_configuration_file(const std::string& path);

/// Canonical serialization: keys in schema order, two-space indentation,
/// trailing newline. parse(serialize(cfg)) == cfg, and serialize(parse(s))
/// is byte-identical to s for files written by this serializer.
std::string serialize(const GluingConfiguration& cfg);

}  // namespace zerocyc::config
