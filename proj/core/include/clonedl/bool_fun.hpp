#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "clonedl/truth_table.hpp"

namespace clonedl {

/// A named Boolean connective given by its truth table. Arity 0 encodes a
/// constant.
class BoolFun {
public:
  BoolFun(std::string name, TruthTable table) : name_(std::move(name)), table_(std::move(table)) {}
  /// Builds from a bitstring; throws SyntaxError unless its length is 2^arity.
  BoolFun(std::string name, unsigned arity, std::string_view bits);

  const std::string& name() const noexcept { return name_; }
  unsigned arity() const noexcept { return table_.num_vars(); }
  const TruthTable& table() const noexcept { return table_; }

  bool operator()(std::size_t index) const noexcept { return table_.get(index); }

  friend bool operator==(const BoolFun& a, const BoolFun& b) noexcept = default;

private:
  std::string name_;
  TruthTable table_;
};

using ConnPtr = std::shared_ptr<const BoolFun>;

/// The builtin connectives: and, or, not, xor, imp, nimp, eq, id, top, bot,
/// xor3, maj, s00, s10, dbase.
const std::vector<ConnPtr>& builtin_connectives();
/// Returns the builtin named `name`, or nullptr.
ConnPtr builtin(std::string_view name);

/// A finite connective set B, keyed by connective name.
class Signature {
public:
  Signature() = default;
  Signature(std::initializer_list<ConnPtr> conns);
  /// Builtins by name; throws UnknownConnective.
  static Signature of(std::initializer_list<std::string_view> names);

  /// Adds `f`; throws SyntaxError if a different connective already has its name.
  void add(ConnPtr f);
  ConnPtr find(std::string_view name) const;
  bool contains(std::string_view name) const { return find(name) != nullptr; }
  void erase(std::string_view name) { conns_.erase(std::string(name)); }

  std::size_t size() const noexcept { return conns_.size(); }
  bool empty() const noexcept { return conns_.empty(); }
  std::vector<ConnPtr> connectives() const;
  std::vector<std::string> names() const;
  unsigned max_arity() const noexcept;

  Signature merged(const Signature& other) const;
  bool includes(const Signature& other) const;

  friend bool operator==(const Signature& a, const Signature& b);

private:
  std::map<std::string, ConnPtr, std::less<>> conns_;
};

}  // namespace clonedl
