#pragma once

#include <cstdint>
#include <ostream>

namespace clonedl::cli {

/// Cross-checks every licensed engine against the generic engine on random
/// theories of each fragment family. Returns the number of disagreements.
std::size_t selftest(std::uint64_t seed, unsigned per_family, std::ostream& out);

}  // namespace clonedl::cli
