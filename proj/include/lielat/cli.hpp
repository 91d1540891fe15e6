#pragma once

#include <ostream>

namespace lielat::cli {

// Dispatches a full command line. stdout gets a single JSON document,
// diagnostics go to `err`. Exit codes: 0 success, 2 invalid input,
// 3 inconclusive (Unknown verdict or budget exhaustion).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lielat::cli
