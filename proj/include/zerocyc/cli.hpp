#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zerocyc::cli {

/// Command dispatch. Exit codes: 0 for informational success and for a
/// FiniteDimensional verdict, 1 for NotEstablished or failed checks, 2 for
/// parse/validation/usage errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

int run(int argc, char** argv);

}  // namespace zerocyc::cli
