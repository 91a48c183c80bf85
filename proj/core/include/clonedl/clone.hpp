#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clonedl/bool_fun.hpp"

namespace clonedl {

/// Truth-table properties of one connective.
struct FunSignature {
  bool reproducing0 = false;
  bool reproducing1 = false;
  bool monotone = false;
  bool self_dual = false;
  bool linear = false;
  bool separating0 = false;
  bool separating1 = false;
  /// Essential variables, 0-based.
  std::vector<unsigned> depends_on;
  bool is_projection = false;
  bool is_constant = false;
  /// Constant, or the conjunction of its essential variables.
  bool is_and_shape = false;
  /// Constant, or the disjunction of its essential variables.
  bool is_or_shape = false;
  /// When linear: f = linear_constant xor (xor of linear_vars).
  bool linear_constant = false;
  std::vector<unsigned> linear_vars;
};

FunSignature function_signature(const BoolFun& f);

/// Clones from the standard table of Post's lattice, plus the R0-restricted
/// variants named by the classification theorems.
enum class Clone {
  BF, R0, R1, M, S0, S1, S00, S10, S11, D, D2,
  L, L0, L1, L2, L3, V, V2, E, E2, N, N2, I, I2,
  E0, V0, I0,
};

std::string_view to_string(Clone c);
/// Throws UnknownClone.
Clone clone_from_string(std::string_view name);

/// Property-defined clones accepted by `subset_of_clone`.
inline constexpr std::array<Clone, 8> kSubsetClones = {
    Clone::R1, Clone::M, Clone::L, Clone::L1, Clone::V, Clone::E, Clone::N, Clone::I};
/// Clones with ternary bases accepted by `contains_clone`.
inline constexpr std::array<Clone, 12> kContainsClones = {
    Clone::S1, Clone::D,  Clone::S11, Clone::S00, Clone::S10, Clone::D2,
    Clone::N2, Clone::L0, Clone::L2,  Clone::V2,  Clone::E2,  Clone::I2};

/// Base of a row of the standard clone table (R0-restricted variants excluded).
Signature clone_base(Clone c);

/// The ternary members of [B], as a set over the 256 three-variable tables.
/// Table byte bit i is the value at x = i&1, y = (i>>1)&1, z = (i>>2)&1.
class Slice3 {
public:
  static constexpr std::uint8_t kX = 0xAA;
  static constexpr std::uint8_t kY = 0xCC;
  static constexpr std::uint8_t kZ = 0xF0;

  bool contains(std::uint8_t table) const noexcept { return members_.test(table); }
  std::size_t size() const noexcept { return members_.count(); }
  const std::bitset<256>& bits() const noexcept { return members_; }
  std::vector<std::uint8_t> members() const;
  bool is_subset_of(const Slice3& other) const noexcept {
    return (members_ & ~other.members_).none();
  }

  friend bool operator==(const Slice3&, const Slice3&) = default;

private:
  friend Slice3 slice3_closure(const Signature& B);
  std::bitset<256> members_;
};

/// Least set of ternary functions containing the projections and closed under
/// every connective of B. Throws ArityUnsupported for arity above 3.
Slice3 slice3_closure(const Signature& B);

/// Lifts a connective of arity <= 3 to a ternary table (extra variables dummy).
std::uint8_t lift_to_ternary(const BoolFun& f);

/// True iff every base function of C lies in the slice. Throws UnknownClone
/// unless C is in kContainsClones.
bool contains_clone(const Slice3& slice, Clone c);
/// True iff every connective of B has C's defining property. Throws
/// UnknownClone unless C is in kSubsetClones.
bool subset_of_clone(const Signature& B, Clone c);

enum class Problem { Ext, Cred, Skep };
enum class ComplexityCase { SigmaP2, PiP2, DeltaP2, NP, CoNP, P, NL, Trivial };
enum class EngineKind {
  Generic,
  MonotoneIterative,
  R1Unique,
  AffineGuess,
  PolyFragment,
  Reachability,
  TrivialYes,
};

std::string_view to_string(Problem p);
std::string_view to_string(ComplexityCase c);
std::string_view to_string(EngineKind e);

struct CloneReport {
  std::vector<std::pair<std::string, FunSignature>> properties;
  std::vector<std::pair<Clone, bool>> subset;
  std::vector<std::pair<Clone, bool>> contains;
  ComplexityCase ext_case = ComplexityCase::Trivial;
  ComplexityCase cred_case = ComplexityCase::NL;
  ComplexityCase skep_case = ComplexityCase::NL;
  EngineKind ext_engine = EngineKind::TrivialYes;
  EngineKind cred_engine = EngineKind::Reachability;
  EngineKind skep_engine = EngineKind::Reachability;

  bool is_subset(Clone c) const;
  bool does_contain(Clone c) const;
  ComplexityCase case_for(Problem p) const;
  EngineKind engine_for(Problem p) const;
};

/// Evaluates the case conditions of the three classification theorems and
/// picks an engine per problem. Throws ArityUnsupported for connectives of
/// arity above 3.
CloneReport dispatch_case(const Signature& B);

}  // namespace clonedl
