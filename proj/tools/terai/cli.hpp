#pragma once

#include <iosfwd>

namespace terai::cli {

/// Runs one CLI invocation. Exit codes: 0 verdicts/searches as expected,
/// 1 violation or unexpected oracle hit, 2 usage or precondition error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace terai::cli
