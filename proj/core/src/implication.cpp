#include "clonedl/implication.hpp"

#include <algorithm>
#include <bit>

#include "clonedl/clone.hpp"
#include "clonedl/error.hpp"

namespace clonedl {

namespace {

void check_cap(std::size_t n) {
  if (n > kMaxTableVars) {
    throw Error(ErrorKind::TooManyVariables, std::to_string(n) + " variables exceed the cap of " +
                                                 std::to_string(kMaxTableVars));
  }
}

VarSet joint_variables(std::span<const Formula> premises, const Formula* goal) {
  VarSet vars;
  for (const auto& f : premises) {
    collect_variables(f, vars);
  }
  if (goal) {
    collect_variables(*goal, vars);
  }
  return vars;
}

const FunSignature& cached_signature(const BoolFun& f) {
  thread_local std::unordered_map<const BoolFun*, std::pair<BoolFun, FunSignature>> cache;
  auto it = cache.find(&f);
  if (it == cache.end() || !(it->second.first == f)) {
    it = cache.insert_or_assign(&f, std::make_pair(f, function_signature(f))).first;
  }
  return it->second.second;
}

// Truth table and properties of a whole formula over its own variables.
std::pair<VariableOrder, FunSignature> semantic_signature(const Formula& f) {
  auto order = VariableOrder::of(variables(f));
  check_cap(order.size());
  BoolFun fun("", table_of(f, order));
  return {std::move(order), function_signature(fun)};
}

void xor_into(VarSet& acc, const VarSet& other) {
  for (const auto& v : other) {
    if (!acc.erase(v)) {
      acc.insert(v);
    }
  }
}

AffineForm affine_compositional(const Formula& f) {
  if (f.is_var()) {
    return {{f.var_name()}, false};
  }
  const auto& sig = cached_signature(*f.conn());
  if (!sig.linear) {
    throw Error(ErrorKind::NotAffine, "'" + f.conn()->name() + "' is not linear");
  }
  AffineForm out{{}, sig.linear_constant};
  for (auto j : sig.linear_vars) {
    auto arg = affine_compositional(f.args()[j]);
    xor_into(out.vars, arg.vars);
    out.constant ^= arg.constant;
  }
  return out;
}

ShapeForm shape_compositional(const Formula& f, bool conjunctive) {
  using K = ShapeForm::Kind;
  if (f.is_var()) {
    return {K::Vars, {f.var_name()}};
  }
  const auto& sig = cached_signature(*f.conn());
  if (sig.is_constant) {
    return {(*f.conn())(0) ? K::Top : K::Bottom, {}};
  }
  if (!(conjunctive ? sig.is_and_shape : sig.is_or_shape)) {
    throw Error(ErrorKind::ShapeMismatch, "'" + f.conn()->name() + "' is not " +
                                              (conjunctive ? "conjunctive" : "disjunctive"));
  }
  // The absorbing constant of the operation.
  const K absorbing = conjunctive ? K::Bottom : K::Top;
  ShapeForm out{K::Vars, {}};
  for (auto j : sig.depends_on) {
    auto arg = shape_compositional(f.args()[j], conjunctive);
    if (arg.kind == absorbing) {
      return {absorbing, {}};
    }
    out.vars.insert(arg.vars.begin(), arg.vars.end());
  }
  if (out.vars.empty()) {
    out.kind = conjunctive ? K::Top : K::Bottom;
  }
  return out;
}

ShapeForm shape_form(const Formula& f, bool conjunctive) {
  try {
    return shape_compositional(f, conjunctive);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ShapeMismatch) {
      throw;
    }
  }
  auto [order, sig] = semantic_signature(f);
  if (sig.is_constant) {
    return {sig.reproducing1 ? ShapeForm::Kind::Top : ShapeForm::Kind::Bottom, {}};
  }
  if (!(conjunctive ? sig.is_and_shape : sig.is_or_shape)) {
    throw Error(ErrorKind::ShapeMismatch, serialize(f) + " is not " +
                                              (conjunctive ? "conjunctive" : "disjunctive"));
  }
  ShapeForm out{ShapeForm::Kind::Vars, {}};
  for (auto j : sig.depends_on) {
    out.vars.insert(order.names()[j]);
  }
  return out;
}

bool shape_implies(std::span<const ShapeForm> premises, const ShapeForm& goal, bool conjunctive) {
  using K = ShapeForm::Kind;
  for (const auto& p : premises) {
    if (p.kind == K::Bottom) {
      return true;
    }
  }
  if (goal.kind == K::Top) {
    return true;
  }
  if (goal.kind == K::Bottom) {
    return false;
  }
  if (conjunctive) {
    VarSet have;
    for (const auto& p : premises) {
      have.insert(p.vars.begin(), p.vars.end());
    }
    return std::includes(have.begin(), have.end(), goal.vars.begin(), goal.vars.end());
  }
  for (const auto& p : premises) {
    if (p.kind == K::Vars &&
        std::includes(goal.vars.begin(), goal.vars.end(), p.vars.begin(), p.vars.end())) {
      return true;
    }
  }
  return false;
}

class TruthTableBackend final : public EntailmentBackend {
public:
  explicit TruthTableBackend(const VarSet& universe)
      : EntailmentBackend(ImplicationEngine::Oracle) {
    check_cap(universe.size());
    order_ = VariableOrder::of(universe);
  }

private:
  const TruthTable& table(const Formula& f) {
    auto it = cache_.find(f);
    if (it == cache_.end()) {
      it = cache_.emplace(f, table_of(f, order_)).first;
    }
    return it->second;
  }

  TruthTable models(std::span<const Formula> premises) {
    auto acc = TruthTable::constant(static_cast<unsigned>(order_.size()), true);
    for (const auto& p : premises) {
      acc &= table(p);
    }
    return acc;
  }

  bool do_entails(std::span<const Formula> premises, const Formula& goal,
                  bool negate_goal) override {
    const auto& g = table(goal);
    const auto m = models(premises);
    return negate_goal ? !m.intersects(g) : m.implies(g);
  }

  bool do_consistent(std::span<const Formula> premises) override {
    return !models(premises).is_zero();
  }

  VariableOrder order_;
  std::unordered_map<Formula, TruthTable, FormulaHash> cache_;
};

class AffineBackend final : public EntailmentBackend {
public:
  AffineBackend() : EntailmentBackend(ImplicationEngine::Affine) {}

private:
  const AffineForm& form(const Formula& f) {
    auto it = cache_.find(f);
    if (it == cache_.end()) {
      it = cache_.emplace(f, affine_form(f)).first;
    }
    return it->second;
  }

  AffineSystem system(std::span<const Formula> premises) {
    AffineSystem sys;
    for (const auto& p : premises) {
      sys.add(form(p));
    }
    return sys;
  }

  bool do_entails(std::span<const Formula> premises, const Formula& goal,
                  bool negate_goal) override {
    return system(premises).entails(form(goal), !negate_goal);
  }

  bool do_consistent(std::span<const Formula> premises) override {
    return !system(premises).inconsistent();
  }

  std::unordered_map<Formula, AffineForm, FormulaHash> cache_;
};

class ShapeBackend final : public EntailmentBackend {
public:
  explicit ShapeBackend(bool conjunctive)
      : EntailmentBackend(conjunctive ? ImplicationEngine::Conjunctive
                                      : ImplicationEngine::Disjunctive),
        conjunctive_(conjunctive) {}

private:
  const ShapeForm& form(const Formula& f) {
    auto it = cache_.find(f);
    if (it == cache_.end()) {
      it = cache_.emplace(f, shape_form(f, conjunctive_)).first;
    }
    return it->second;
  }

  std::vector<ShapeForm> forms(std::span<const Formula> premises) {
    std::vector<ShapeForm> out;
    out.reserve(premises.size());
    for (const auto& p : premises) {
      out.push_back(form(p));
    }
    return out;
  }

  bool do_entails(std::span<const Formula> premises, const Formula& goal,
                  bool negate_goal) override {
    if (negate_goal) {
      throw Error(ErrorKind::ShapeMismatch, "negated goals are not conjunctive or disjunctive");
    }
    return shape_implies(forms(premises), form(goal), conjunctive_);
  }

  bool do_consistent(std::span<const Formula> premises) override {
    for (const auto& p : premises) {
      if (form(p).kind == ShapeForm::Kind::Bottom) {
        return false;
      }
    }
    return true;
  }

  bool conjunctive_;
  std::unordered_map<Formula, ShapeForm, FormulaHash> cache_;
};

}  // namespace

std::string_view to_string(ImplicationEngine e) {
  switch (e) {
    case ImplicationEngine::Auto: return "auto";
    case ImplicationEngine::Oracle: return "oracle";
    case ImplicationEngine::Affine: return "affine";
    case ImplicationEngine::Conjunctive: return "conjunctive";
    case ImplicationEngine::Disjunctive: return "disjunctive";
  }
  return "?";
}

ImplicationEngine implication_engine_from_string(std::string_view name) {
  for (auto e : {ImplicationEngine::Auto, ImplicationEngine::Oracle, ImplicationEngine::Affine,
                 ImplicationEngine::Conjunctive, ImplicationEngine::Disjunctive}) {
    if (to_string(e) == name) {
      return e;
    }
  }
  throw Error(ErrorKind::SyntaxError, "unknown implication engine '" + std::string(name) + "'");
}

ImplicationEngine select_implication_engine(const Signature& signature) {
  if (subset_of_clone(signature, Clone::L)) {
    return ImplicationEngine::Affine;
  }
  if (subset_of_clone(signature, Clone::E)) {
    return ImplicationEngine::Conjunctive;
  }
  if (subset_of_clone(signature, Clone::V)) {
    return ImplicationEngine::Disjunctive;
  }
  return ImplicationEngine::Oracle;
}

bool implies(const ImplicationQuery& q, ImplicationEngine engine) {
  if (engine == ImplicationEngine::Auto) {
    Signature sig = q.signature;
    for (const auto& p : q.premises) {
      collect_connectives(p, sig);
    }
    collect_connectives(q.goal, sig);
    engine = select_implication_engine(sig);
  }
  switch (engine) {
    case ImplicationEngine::Affine: return affine_implies(q.premises, q.goal);
    case ImplicationEngine::Conjunctive: return conjunctive_implies(q.premises, q.goal);
    case ImplicationEngine::Disjunctive: return disjunctive_implies(q.premises, q.goal);
    default: return truth_table_implies(q.premises, q.goal);
  }
}

bool truth_table_implies(std::span<const Formula> premises, const Formula& goal) {
  return TruthTableBackend(joint_variables(premises, &goal)).entails(premises, goal);
}

bool truth_table_satisfiable(std::span<const Formula> formulas) {
  return TruthTableBackend(joint_variables(formulas, nullptr)).consistent(formulas);
}

AffineForm affine_form(const Formula& f) {
  try {
    return affine_compositional(f);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotAffine) {
      throw;
    }
  }
  auto [order, sig] = semantic_signature(f);
  if (!sig.linear) {
    throw Error(ErrorKind::NotAffine, serialize(f) + " is not linear");
  }
  AffineForm out{{}, sig.linear_constant};
  for (auto j : sig.linear_vars) {
    out.vars.insert(order.names()[j]);
  }
  return out;
}

AffineSystem::Bits AffineSystem::to_bits(const VarSet& vars, bool grow) {
  for (const auto& v : vars) {
    if (grow && !index_.contains(v)) {
      index_.emplace(v, index_.size());
    }
  }
  const std::size_t words = (index_.size() + 63) / 64;
  for (auto& r : rows_) {
    r.bits.resize(words, 0);
  }
  bool unknown = false;
  return to_bits_const(vars, unknown);
}

AffineSystem::Bits AffineSystem::to_bits_const(const VarSet& vars, bool& unknown) const {
  Bits bits((index_.size() + 63) / 64, 0);
  for (const auto& v : vars) {
    auto it = index_.find(v);
    if (it == index_.end()) {
      unknown = true;
      continue;
    }
    bits[it->second / 64] ^= std::uint64_t{1} << (it->second % 64);
  }
  return bits;
}

void AffineSystem::reduce(Bits& bits, bool& rhs) const {
  for (const auto& r : rows_) {
    if ((bits[r.pivot / 64] >> (r.pivot % 64)) & 1u) {
      for (std::size_t w = 0; w < bits.size(); ++w) {
        bits[w] ^= r.bits[w];
      }
      rhs ^= r.rhs;
    }
  }
}

void AffineSystem::add(const AffineForm& form) {
  if (inconsistent_) {
    return;
  }
  Bits bits = to_bits(form.vars, true);
  bool rhs = !form.constant;
  reduce(bits, rhs);
  auto nz = std::find_if(bits.begin(), bits.end(), [](auto w) { return w != 0; });
  if (nz == bits.end()) {
    if (rhs) {
      inconsistent_ = true;
    }
    return;
  }
  const std::size_t word = static_cast<std::size_t>(nz - bits.begin());
  const std::size_t pivot = word * 64 + static_cast<std::size_t>(std::countr_zero(*nz));
  for (auto& r : rows_) {
    if ((r.bits[pivot / 64] >> (pivot % 64)) & 1u) {
      for (std::size_t w = 0; w < bits.size(); ++w) {
        r.bits[w] ^= bits[w];
      }
      r.rhs ^= rhs;
    }
  }
  rows_.push_back({std::move(bits), rhs, pivot});
}

bool AffineSystem::entails(const AffineForm& form, bool value) const {
  if (inconsistent_) {
    return true;
  }
  bool unknown = false;
  Bits bits = to_bits_const(form.vars, unknown);
  if (unknown) {
    // A variable absent from every premise is free.
    return false;
  }
  // form == value  <=>  xor(vars) == value xor constant
  bool rhs = value != form.constant;
  reduce(bits, rhs);
  if (std::any_of(bits.begin(), bits.end(), [](auto w) { return w != 0; })) {
    return false;
  }
  return !rhs;
}

bool affine_implies(std::span<const Formula> premises, const Formula& goal) {
  AffineSystem sys;
  for (const auto& p : premises) {
    sys.add(affine_form(p));
  }
  return sys.entails(affine_form(goal));
}

ShapeForm conjunctive_form(const Formula& f) { return shape_form(f, true); }
ShapeForm disjunctive_form(const Formula& f) { return shape_form(f, false); }

bool conjunctive_implies(std::span<const Formula> premises, const Formula& goal) {
  std::vector<ShapeForm> forms;
  for (const auto& p : premises) {
    forms.push_back(conjunctive_form(p));
  }
  return shape_implies(forms, conjunctive_form(goal), true);
}

bool disjunctive_implies(std::span<const Formula> premises, const Formula& goal) {
  std::vector<ShapeForm> forms;
  for (const auto& p : premises) {
    forms.push_back(disjunctive_form(p));
  }
  return shape_implies(forms, disjunctive_form(goal), false);
}

bool EntailmentBackend::entails(std::span<const Formula> premises, const Formula& goal,
                                bool negate_goal) {
  ++calls_;
  return do_entails(premises, goal, negate_goal);
}

bool EntailmentBackend::consistent(std::span<const Formula> premises) {
  ++calls_;
  return do_consistent(premises);
}

std::unique_ptr<EntailmentBackend> make_backend(ImplicationEngine kind, const VarSet& universe) {
  switch (kind) {
    case ImplicationEngine::Oracle: return std::make_unique<TruthTableBackend>(universe);
    case ImplicationEngine::Affine: return std::make_unique<AffineBackend>();
    case ImplicationEngine::Conjunctive: return std::make_unique<ShapeBackend>(true);
    case ImplicationEngine::Disjunctive: return std::make_unique<ShapeBackend>(false);
    case ImplicationEngine::Auto: break;
  }
  throw std::invalid_argument("make_backend needs a concrete engine");
}

}  // namespace clonedl
