#include "zerocyc/cli.hpp"

#include "zerocyc/catalog.hpp"
#include "zerocyc/complexes.hpp"
#include "zerocyc/config_io.hpp"
#include "zerocyc/criteria.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <optional>
#include <sstream>

namespace zerocyc::cli {

namespace {

constexpr int kOk = 0;
constexpr int kNotEstablished = 1;
constexpr int kBadInput = 2;

struct InputSpec {
  std::string file;
  std::string fixture;
  std::string fixtures_dir;

  bool from_fixture() const { return !fixture.empty(); }
};

// Loads the configuration; reports parse problems on err and returns
// nothing on failure.
std::optional<config::GluingConfiguration> load_input(const InputSpec& in,
                                                      std::ostream& err) {
  try {
    if (in.from_fixture()) {
      std::string dir = in.fixtures_dir.empty()
                            ? catalog::default_fixtures_dir()
                            : in.fixtures_dir;
      return catalog::get_fixture(in.fixture, dir).config;
    }
    return config::load_configuration_file(in.file);
  } catch (const catalog::UnknownFixture& e) {
    err << "error: " << e.what() << "\n";
  } catch (const config::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
  }
  return std::nullopt;
}

int report_validation(const config::ValidationReport& report, bool json_format,
                      std::ostream& out) {
  if (json_format) {
    nlohmann::ordered_json doc;
    doc["valid"] = report.valid();
    doc["violations"] = nlohmann::ordered_json::array();
    for (const auto& v : report.violations) doc["violations"].push_back(v.message);
    doc["warnings"] = report.warnings;
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& v : report.violations) out << "violation: " << v.message << "\n";
    for (const auto& w : report.warnings) out << "warning: " << w << "\n";
    if (report.valid()) out << "valid\n";
  }
  return report.valid() ? kOk : kBadInput;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Exact-arithmetic checker for the zero-cycle finite-dimensionality "
      "criteria of glued rational-curve configurations"};
  app.require_subcommand(1);

  InputSpec input;
  std::string format = "text";
  bool dump = false;
  std::optional<bool> assume_fd;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input.file, "configuration JSON file");
    cmd->add_option("--fixture", input.fixture, "bundled fixture name");
    cmd->add_option("--fixtures-dir", input.fixtures_dir,
                    "override the fixture directory");
    cmd->add_option("--format", format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "check a configuration against the model assumptions");
  add_input(validate_cmd);

  CLI::App* counts_cmd =
      app.add_subcommand("counts", "print the counts (n1, n2, n3, m1, m2)");
  add_input(counts_cmd);

  CLI::App* check_cmd = app.add_subcommand(
      "check", "run the full finite-dimensionality criterion");
  add_input(check_cmd);
  check_cmd->add_flag("--dump-matrices", dump, "also print the complex matrices");
  check_cmd->add_option(
      "--assume-normalization-fd", assume_fd,
      "assert that the normalization has finite-dimensional CH0 "
      "(required for user files; defaults to true for bundled fixtures)");

  CLI::App* matrices_cmd =
      app.add_subcommand("matrices", "print the complex matrices");
  add_input(matrices_cmd);

  CLI::App* fixtures_cmd =
      app.add_subcommand("fixtures", "list the bundled fixtures");
  fixtures_cmd->add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kBadInput;
  }

  const bool json_format = format == "json";

  if (fixtures_cmd->parsed()) {
    auto list = catalog::list_fixtures();
    if (json_format) {
      nlohmann::ordered_json doc = nlohmann::ordered_json::array();
      for (const auto& f : list)
        doc.push_back({{"name", f.name},
                       {"source", f.source},
                       {"counts",
                        {{"n1", f.counts.n1},
                         {"n2", f.counts.n2},
                         {"n3", f.counts.n3},
                         {"m1", f.counts.m1},
                         {"m2", f.counts.m2}}}});
      out << doc.dump(2) << "\n";
    } else {
      for (const auto& f : list)
        out << f.name << "  (" << f.counts.n1 << "," << f.counts.n2 << ","
            << f.counts.n3 << "," << f.counts.m1 << "," << f.counts.m2
            << ")  " << f.source << "\n";
    }
    return kOk;
  }

  if (input.file.empty() == input.fixture.empty()) {
    err << "usage error: provide exactly one of a file path or --fixture\n"
        << app.help();
    return kBadInput;
  }

  auto cfg = load_input(input, err);
  if (!cfg) return kBadInput;

  config::ValidationReport validation = config::validate(*cfg);

  if (validate_cmd->parsed())
    return report_validation(validation, json_format, out);

  if (!validation.valid()) {
    for (const auto& v : validation.violations)
      err << "violation: " << v.message << "\n";
    return kBadInput;
  }

  if (counts_cmd->parsed()) {
    config::Counts c = config::counts(*cfg);
    if (json_format) {
      nlohmann::ordered_json doc = {{"n1", c.n1},
                                    {"n2", c.n2},
                                    {"n3", c.n3},
                                    {"m1", c.m1},
                                    {"m2", c.m2}};
      out << doc.dump(2) << "\n";
    } else {
      out << "n1=" << c.n1 << " n2=" << c.n2 << " n3=" << c.n3
          << " m1=" << c.m1 << " m2=" << c.m2 << "\n";
    }
    return kOk;
  }

  if (matrices_cmd->parsed()) {
    out << mv::dump_matrices(mv::build_complexes(*cfg));
    return kOk;
  }

  // check
  if (!assume_fd.has_value()) {
    if (input.from_fixture()) {
      assume_fd = true;  // bundled fixtures have rational normalizations
    } else {
      err << "usage error: --assume-normalization-fd true|false is required "
             "for user files; the finite-dimensionality of the "
             "normalization is a hypothesis, never assumed silently\n";
      return kBadInput;
    }
  }

  for (const std::string& w : validation.warnings) err << "warning: " << w << "\n";
  criteria::CriterionReport report = criteria::full_verdict(*cfg, *assume_fd);
  if (dump) out << mv::dump_matrices(mv::build_complexes(*cfg));
  out << (json_format ? criteria::to_json(report) : criteria::to_text(report));
  return report.verdict == criteria::Verdict::FiniteDimensional
             ? kOk
             : kNotEstablished;
}

int run(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace zerocyc::cli
