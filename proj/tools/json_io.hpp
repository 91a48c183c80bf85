#pragma once

#include <string>
#include <string_view>

#include <clonedl/clone.hpp>
#include <clonedl/engine.hpp>

namespace clonedl::cli {

// {"properties": {NAME: {...}}, "subset": {CLONE: bool}, "contains": {CLONE: bool},
//  "cases": {"ext", "cred", "skep"}, "engines": {"ext", "cred", "skep"}}
std::string report_to_json(const CloneReport& report);

// {"problem", "answer": "yes"|"no", "engine", "case": string|null,
//  "witness": [indices]|null, "stats": {"subsets_checked", "implication_calls"}}
std::string decision_to_json(const Decision& d);
/// Throws SyntaxError on schema violations.
Decision decision_from_json(std::string_view text);

}  // namespace clonedl::cli
