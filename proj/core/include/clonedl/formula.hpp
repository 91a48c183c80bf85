#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clonedl/bool_fun.hpp"
#include "clonedl/truth_table.hpp"

namespace clonedl {

/// Immutable propositional formula: a variable or a connective applied to
/// exactly `arity` subformulae. Constants are 0-ary applications. Copies share
/// structure.
class Formula {
public:
  static Formula var(std::string name);
  /// Throws ArityMismatch unless `args.size() == conn->arity()`.
  static Formula app(ConnPtr conn, std::vector<Formula> args);

  bool is_var() const noexcept { return node_->conn == nullptr; }
  const std::string& var_name() const noexcept { return node_->name; }
  const ConnPtr& conn() const noexcept { return node_->conn; }
  std::span<const Formula> args() const noexcept { return node_->args; }

  /// Number of nodes.
  std::size_t size() const noexcept { return node_->size; }
  /// Longest root-to-leaf path counted in edges.
  std::size_t depth() const noexcept { return node_->depth; }
  std::size_t hash() const noexcept { return node_->hash; }

  /// Structural equality; connectives compare by name and table.
  friend bool operator==(const Formula& a, const Formula& b) noexcept;

private:
  struct Node {
    std::string name;
    ConnPtr conn;
    std::vector<Formula> args;
    std::size_t hash = 0;
    std::size_t size = 1;
    std::size_t depth = 0;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

using Assignment = std::map<std::string, bool, std::less<>>;
using VarSet = std::set<std::string, std::less<>>;

/// Identifiers starting with '_' are reserved for generated variables.
bool is_reserved_name(std::string_view name) noexcept;
bool is_identifier(std::string_view name) noexcept;

struct ParseOptions {
  /// Accept '_'-prefixed variable names (used when reading generated theories).
  bool allow_reserved = false;
};

/// Parses the prefix grammar `formula := var | "(" conn formula* ")"`.
/// Errors carry the byte offset of the offending token.
Formula parse(std::string_view text, const Signature& signature, ParseOptions options = {});
/// Parses zero or more whitespace-separated formulae.
std::vector<Formula> parse_sequence(std::string_view text, const Signature& signature,
                                    ParseOptions options = {});
/// Canonical text: single spaces, no surrounding whitespace.
std::string serialize(const Formula& f);

VarSet variables(const Formula& f);
void collect_variables(const Formula& f, VarSet& out);
/// Connectives occurring in `f`.
Signature connectives(const Formula& f);
void collect_connectives(const Formula& f, Signature& out);
bool uses_only(const Formula& f, const Signature& signature);

/// Throws UnboundVariable if `sigma` misses a variable of `f`.
bool eval(const Formula& f, const Assignment& sigma);
/// Evaluates with every variable set to `value`.
bool eval_constant_point(const Formula& f, bool value);

/// Maps variable names to table columns.
class VariableOrder {
public:
  VariableOrder() = default;
  explicit VariableOrder(std::vector<std::string> names);
  static VariableOrder of(const VarSet& vars) { return VariableOrder({vars.begin(), vars.end()}); }

  /// Column of `name`; throws UnboundVariable when absent.
  unsigned index(std::string_view name) const;
  bool contains(std::string_view name) const { return index_.find(name) != index_.end(); }
  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }

private:
  std::vector<std::string> names_;
  std::map<std::string, unsigned, std::less<>> index_;
};

/// Truth table of `f` with columns per `order`; throws TooManyVariables
/// beyond kMaxTableVars and UnboundVariable if `f` has a variable outside it.
TruthTable table_of(const Formula& f, const VariableOrder& order);
/// `f` as a connective of arity |var_order|.
BoolFun truth_table_of(const Formula& f, const std::vector<std::string>& var_order);

/// Replaces every subtree structurally equal to `pattern` by `replacement`,
/// outermost occurrences first; replacements are not rescanned.
Formula substitute(const Formula& f, const Formula& pattern, const Formula& replacement);

/// Balanced application tree of the binary associative `op` over `args`,
/// of depth ceil(log2 |args|). Throws EmptyArgs on an empty list.
Formula balanced_composition(const ConnPtr& op, std::span<const Formula> args);

/// First of `base`, `base1`, `base2`, ... not in `taken`.
std::string fresh_name(std::string_view base, const VarSet& taken);

}  // namespace clonedl
