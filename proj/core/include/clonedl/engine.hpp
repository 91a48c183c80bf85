#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clonedl/clone.hpp"
#include "clonedl/implication.hpp"
#include "clonedl/theory.hpp"

namespace clonedl {

/// Subset enumeration cap of the generic and guessing engines.
inline constexpr std::size_t kMaxGenericDefaults = 20;
/// Rule cap of the polynomial engines.
inline constexpr std::size_t kMaxPolyRules = 10000;

/// Engines a caller may request. Anything but Auto is refused with
/// EngineCloneMismatch when unsound for the theory's signature.
enum class EngineChoice { Auto, Generic, Monotone, R1, Affine, Reachability };

std::string_view to_string(EngineChoice e);
/// Throws SyntaxError for an unknown name.
EngineChoice engine_choice_from_string(std::string_view name);

/// Generating defaults of a stable extension, by rule index.
struct ExtensionWitness {
  std::vector<std::size_t> generating;
  /// The extension is the set of all formulae (W is inconsistent).
  bool inconsistent = false;

  friend bool operator==(const ExtensionWitness&, const ExtensionWitness&) = default;
};

struct DecisionStats {
  std::size_t subsets_checked = 0;
  std::size_t implication_calls = 0;
};

struct Decision {
  Problem problem = Problem::Ext;
  bool answer = false;
  EngineKind engine = EngineKind::Generic;
  /// Empty when the signature could not be classified (arity above 3).
  std::optional<ComplexityCase> complexity;
  /// ext/cred: an extension proving "yes"; skep: an extension refuting it.
  std::optional<ExtensionWitness> witness;
  DecisionStats stats;
  std::vector<std::string> warnings;
};

struct DecisionOptions {
  EngineChoice engine = EngineChoice::Auto;
};

/// Satisfiability of W; constant time when W's connectives are 1-reproducing.
bool is_consistent_W(const DefaultTheory& T);

/// Whether Th(W u concl(G)) is a stable extension.
bool check_stable(const DefaultTheory& T, std::span<const std::size_t> G);

/// All generating sets that pass check_stable, in enumeration order
/// (ascending size, then ascending bitmask). Throws DefaultCountTooLarge.
std::vector<ExtensionWitness> enumerate_extensions(const DefaultTheory& T);

/// Justification-free iteration; requires every connective 1-reproducing.
ExtensionWitness unique_extension_r1(const DefaultTheory& T);

Decision ext(const DefaultTheory& T, DecisionOptions options = {});
Decision cred(const DefaultTheory& T, const Formula& phi, DecisionOptions options = {});
Decision skep(const DefaultTheory& T, const Formula& phi, DecisionOptions options = {});

/// Runs one engine without consulting the classification. `oracle` selects the
/// entailment backend of the engines that take one (the generic engine always
/// uses truth tables); by default it is picked from the signature. Throws
/// EngineCloneMismatch when the engine is unsound for the signature.
Decision run_engine(EngineKind engine, Problem problem, const DefaultTheory& T,
                    const std::optional<Formula>& phi,
                    std::optional<ImplicationEngine> oracle = std::nullopt);

}  // namespace clonedl
