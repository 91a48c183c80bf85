#pragma once

#include <ostream>

namespace clonedl::cli {

/// Exit codes: 0 success (the answer is in the output), 1 selftest failure,
/// 2 input error, 3 size cap exceeded.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace clonedl::cli
