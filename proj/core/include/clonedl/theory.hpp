#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clonedl/formula.hpp"

namespace clonedl {

/// (alpha : beta) / gamma
struct DefaultRule {
  Formula prerequisite;
  Formula justification;
  Formula consequent;

  friend bool operator==(const DefaultRule&, const DefaultRule&) = default;
};

struct DefaultTheory {
  std::vector<Formula> W;
  std::vector<DefaultRule> D;
  Signature signature;

  VarSet variables() const;
  /// Signature plus every connective occurring in W and D.
  Signature used_signature() const;
};

/// A theory together with an optional query formula.
struct TheoryInstance {
  DefaultTheory theory;
  std::optional<Formula> goal;
};

/// True for 0-ary connectives with value 1.
bool is_constant_true(const BoolFun& f);

/// Replaces every constant-true subformula by a fresh variable t and adds t to
/// W (duplicates in W are dropped). Returns the input unchanged when no
/// constant true occurs. `fresh_var` receives the name chosen, or stays empty.
TheoryInstance eliminate_constant_true(const TheoryInstance& in, std::string* fresh_var = nullptr);
DefaultTheory eliminate_constant_true(const DefaultTheory& T, std::string* fresh_var = nullptr);

/// Reads the theory file format:
///
///   # comment
///   defconn NAME ARITY BITS
///   signature: NAME...
///   %reserved
///   W:
///   FORMULA
///   D:
///   (default PRE JUST CON)
///   goal: FORMULA
///
/// Builtin connectives are always available; the resulting signature is the
/// declared connectives, any `signature:` names, and the builtins used.
/// `%reserved` admits '_'-prefixed variable names. Errors name the line.
TheoryInstance parse_theory(std::string_view text);
std::string serialize_theory(const TheoryInstance& inst);

}  // namespace clonedl
