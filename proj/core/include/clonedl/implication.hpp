#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "clonedl/formula.hpp"

namespace clonedl {

/// Does every model of all `premises` satisfy `goal`?
struct ImplicationQuery {
  std::vector<Formula> premises;
  Formula goal;
  Signature signature;
};

enum class ImplicationEngine { Auto, Oracle, Affine, Conjunctive, Disjunctive };

std::string_view to_string(ImplicationEngine e);
/// Throws SyntaxError for an unknown name.
ImplicationEngine implication_engine_from_string(std::string_view name);

/// Auto picks affine if [B] is in L, conjunctive if in E, disjunctive if in V,
/// and the truth-table oracle otherwise. Inconsistent premises imply anything.
bool implies(const ImplicationQuery& q, ImplicationEngine engine = ImplicationEngine::Auto);
ImplicationEngine select_implication_engine(const Signature& signature);

/// Exhaustive reference check; throws TooManyVariables beyond kMaxTableVars.
bool truth_table_implies(std::span<const Formula> premises, const Formula& goal);
bool truth_table_satisfiable(std::span<const Formula> formulas);

/// f is equivalent to (xor of vars) xor constant.
struct AffineForm {
  VarSet vars;
  bool constant = false;
};
/// Throws NotAffine.
AffineForm affine_form(const Formula& f);

/// Premises as GF(2) equations, kept in reduced row echelon form.
class AffineSystem {
public:
  /// Adds the equation `form == 1`.
  void add(const AffineForm& form);
  bool inconsistent() const noexcept { return inconsistent_; }
  /// True iff every solution satisfies `form == value`.
  bool entails(const AffineForm& form, bool value = true) const;
  std::size_t rank() const noexcept { return rows_.size(); }

private:
  using Bits = std::vector<std::uint64_t>;
  struct Row {
    Bits bits;
    bool rhs = false;
    std::size_t pivot = 0;
  };
  Bits to_bits(const VarSet& vars, bool grow);
  Bits to_bits_const(const VarSet& vars, bool& unknown) const;
  void reduce(Bits& bits, bool& rhs) const;

  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Row> rows_;
  bool inconsistent_ = false;
};

bool affine_implies(std::span<const Formula> premises, const Formula& goal);

/// A conjunctive or disjunctive formula normalized to a constant or a
/// nonempty variable set.
struct ShapeForm {
  enum class Kind { Bottom, Top, Vars };
  Kind kind = Kind::Top;
  VarSet vars;
};
/// Throws ShapeMismatch unless f is a constant or a conjunction of variables.
ShapeForm conjunctive_form(const Formula& f);
/// Throws ShapeMismatch unless f is a constant or a disjunction of variables.
ShapeForm disjunctive_form(const Formula& f);

bool conjunctive_implies(std::span<const Formula> premises, const Formula& goal);
bool disjunctive_implies(std::span<const Formula> premises, const Formula& goal);

/// Stateful entailment checker used by the default-logic engines. Backends
/// cache per-formula normal forms and count calls.
class EntailmentBackend {
public:
  virtual ~EntailmentBackend() = default;

  /// premises |= goal, or premises |= not goal when `negate_goal`.
  bool entails(std::span<const Formula> premises, const Formula& goal, bool negate_goal = false);
  bool consistent(std::span<const Formula> premises);

  ImplicationEngine kind() const noexcept { return kind_; }
  std::size_t calls() const noexcept { return calls_; }

protected:
  explicit EntailmentBackend(ImplicationEngine kind) : kind_(kind) {}
  virtual bool do_entails(std::span<const Formula> premises, const Formula& goal,
                          bool negate_goal) = 0;
  virtual bool do_consistent(std::span<const Formula> premises) = 0;

private:
  ImplicationEngine kind_;
  std::size_t calls_ = 0;
};

/// `universe` must cover every variable the backend will see (used by the
/// truth-table backend; throws TooManyVariables beyond kMaxTableVars).
/// Auto is not accepted here.
std::unique_ptr<EntailmentBackend> make_backend(ImplicationEngine kind, const VarSet& universe);

}  // namespace clonedl
