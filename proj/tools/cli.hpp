#pragma once

#include <ostream>

namespace qfa::cli {

/// Runs the `qfa` command line. Returns the process exit code: 0 whenever the
/// command executed (search outcomes are data), nonzero for usage, input, or
/// validation errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qfa::cli
