#include "clonedl/engine.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>

#include "clonedl/error.hpp"

namespace clonedl {

namespace {

Signature full_signature(const DefaultTheory& T, const std::optional<Formula>& phi) {
  Signature sig = T.used_signature();
  if (phi) {
    collect_connectives(*phi, sig);
  }
  return sig;
}

VarSet universe(const DefaultTheory& T, const std::optional<Formula>& phi) {
  VarSet vars = T.variables();
  if (phi) {
    collect_variables(*phi, vars);
  }
  return vars;
}

std::vector<Formula> generators(const DefaultTheory& T, std::span<const std::size_t> G) {
  std::vector<Formula> out = T.W;
  for (auto i : G) {
    out.push_back(T.D.at(i).consequent);
  }
  return out;
}

std::vector<std::size_t> indices_of(std::uint64_t mask) {
  std::vector<std::size_t> out;
  while (mask) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

// Visits every subset of n elements by ascending size, then ascending mask,
// until `visit` returns false.
template <typename Visit>
void for_each_subset(std::size_t n, Visit visit) {
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::size_t k = 0; k <= n; ++k) {
    std::uint64_t mask = (std::uint64_t{1} << k) - 1;
    while (mask < limit) {
      if (!visit(mask)) {
        return;
      }
      if (mask == 0) {
        break;
      }
      // Next mask with the same popcount.
      const std::uint64_t c = mask & (~mask + 1);
      const std::uint64_t r = mask + c;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
  }
}

void check_generic_cap(std::size_t n, std::string_view what) {
  if (n > kMaxGenericDefaults) {
    throw Error(ErrorKind::DefaultCountTooLarge,
                std::to_string(n) + " " + std::string(what) + " exceed the cap of " +
                    std::to_string(kMaxGenericDefaults));
  }
}

void check_poly_cap(const DefaultTheory& T) {
  if (T.D.size() > kMaxPolyRules) {
    throw Error(ErrorKind::DefaultCountTooLarge, std::to_string(T.D.size()) +
                                                     " defaults exceed the cap of " +
                                                     std::to_string(kMaxPolyRules));
  }
}

bool stable_with(EntailmentBackend& be, const DefaultTheory& T, std::span<const std::size_t> G) {
  const auto hat = generators(T, G);
  if (!be.consistent(hat)) {
    return !be.consistent(T.W);
  }
  std::vector<char> justified(T.D.size());
  for (std::size_t r = 0; r < T.D.size(); ++r) {
    justified[r] = !be.entails(hat, T.D[r].justification, true);
  }
  std::vector<Formula> F = T.W;
  std::vector<char> applied(T.D.size(), 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t r = 0; r < T.D.size(); ++r) {
      if (!applied[r] && justified[r] && be.entails(F, T.D[r].prerequisite)) {
        applied[r] = 1;
        F.push_back(T.D[r].consequent);
        changed = true;
      }
    }
  }
  for (const auto& g : hat) {
    if (!be.entails(F, g)) {
      return false;
    }
  }
  for (const auto& f : F) {
    if (!be.entails(hat, f)) {
      return false;
    }
  }
  return true;
}

// Shared answer logic for engines that enumerate candidate extensions.
class Collector {
public:
  Collector(Problem problem, EntailmentBackend& be, const std::optional<Formula>& phi)
      : problem_(problem), be_(be), phi_(phi) {
    answer_ = problem == Problem::Skep;
  }

  // Returns false once the answer is settled.
  bool offer(const DefaultTheory& T, ExtensionWitness w) {
    switch (problem_) {
      case Problem::Ext:
        answer_ = true;
        witness_ = std::move(w);
        return false;
      case Problem::Cred:
        if (w.inconsistent || be_.entails(generators(T, w.generating), *phi_)) {
          answer_ = true;
          witness_ = std::move(w);
          return false;
        }
        return true;
      case Problem::Skep:
        if (!w.inconsistent && !be_.entails(generators(T, w.generating), *phi_)) {
          answer_ = false;
          witness_ = std::move(w);
          return false;
        }
        return true;
    }
    return true;
  }

  void finish(Decision& d) const {
    d.answer = answer_;
    d.witness = witness_;
  }

private:
  Problem problem_;
  EntailmentBackend& be_;
  const std::optional<Formula>& phi_;
  bool answer_ = false;
  std::optional<ExtensionWitness> witness_;
};

void run_generic(Decision& d, const DefaultTheory& T, const std::optional<Formula>& phi) {
  check_generic_cap(T.D.size(), "defaults");
  auto be = make_backend(ImplicationEngine::Oracle, universe(T, phi));
  Collector collect(d.problem, *be, phi);
  for_each_subset(T.D.size(), [&](std::uint64_t mask) {
    ++d.stats.subsets_checked;
    const auto G = indices_of(mask);
    if (!stable_with(*be, T, G)) {
      return true;
    }
    const bool inconsistent = !be->consistent(generators(T, G));
    return collect.offer(T, {G, inconsistent});
  });
  collect.finish(d);
  d.stats.implication_calls = be->calls();
}

// Guesses which justifications are consistent with the extension, computes
// the least fixpoint for that guess and keeps it when the guess is confirmed.
void run_guess(Decision& d, const DefaultTheory& T, const std::optional<Formula>& phi,
               ImplicationEngine oracle) {
  auto be = make_backend(oracle, universe(T, phi));
  Collector collect(d.problem, *be, phi);
  if (!be->consistent(T.W)) {
    collect.offer(T, {{}, true});
    collect.finish(d);
    d.stats.implication_calls = be->calls();
    return;
  }
  std::vector<Formula> classes;
  std::vector<std::size_t> class_of(T.D.size());
  for (std::size_t r = 0; r < T.D.size(); ++r) {
    const auto& beta = T.D[r].justification;
    auto it = std::find(classes.begin(), classes.end(), beta);
    class_of[r] = static_cast<std::size_t>(it - classes.begin());
    if (it == classes.end()) {
      classes.push_back(beta);
    }
  }
  check_generic_cap(classes.size(), "distinct justifications");

  for_each_subset(classes.size(), [&](std::uint64_t allowed) {
    ++d.stats.subsets_checked;
    std::vector<Formula> F = T.W;
    std::vector<std::size_t> applied;
    std::vector<char> used(T.D.size(), 0);
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t r = 0; r < T.D.size(); ++r) {
        if (!used[r] && ((allowed >> class_of[r]) & 1u) &&
            be->entails(F, T.D[r].prerequisite)) {
          used[r] = 1;
          applied.push_back(r);
          F.push_back(T.D[r].consequent);
          changed = true;
        }
      }
    }
    if (!be->consistent(F)) {
      return true;
    }
    for (std::size_t c = 0; c < classes.size(); ++c) {
      const bool consistent_with = !be->entails(F, classes[c], true);
      if (consistent_with != (((allowed >> c) & 1u) != 0)) {
        return true;
      }
    }
    std::sort(applied.begin(), applied.end());
    return collect.offer(T, {std::move(applied), false});
  });
  collect.finish(d);
  d.stats.implication_calls = be->calls();
}

bool false_at_ones(const Formula& f) { return !eval_constant_point(f, true); }

void run_monotone(Decision& d, const DefaultTheory& T, const std::optional<Formula>& phi,
                  ImplicationEngine oracle) {
  check_poly_cap(T);
  auto be = make_backend(oracle, universe(T, phi));
  Collector collect(d.problem, *be, phi);
  // A monotone W is inconsistent iff one of its members is constant 0.
  if (std::any_of(T.W.begin(), T.W.end(), false_at_ones)) {
    collect.offer(T, {{}, true});
    collect.finish(d);
    return;
  }
  std::vector<Formula> g_new = T.W;
  std::vector<char> fired(T.D.size(), 0);
  std::vector<std::size_t> applied;
  for (;;) {
    const std::vector<Formula> g_old = g_new;
    for (std::size_t r = 0; r < T.D.size(); ++r) {
      const auto& rule = T.D[r];
      if (!fired[r] && !false_at_ones(rule.justification) &&
          be->entails(g_old, rule.prerequisite)) {
        if (false_at_ones(rule.consequent)) {
          collect.finish(d);
          d.answer = d.problem == Problem::Skep;
          d.stats.implication_calls = be->calls();
          return;
        }
        fired[r] = 1;
        applied.push_back(r);
        g_new.push_back(rule.consequent);
      }
    }
    if (g_new.size() == g_old.size()) {
      break;
    }
  }
  std::sort(applied.begin(), applied.end());
  collect.offer(T, {std::move(applied), false});
  collect.finish(d);
  d.stats.implication_calls = be->calls();
}

ExtensionWitness r1_iteration(EntailmentBackend& be, const DefaultTheory& T) {
  std::vector<Formula> F = T.W;
  std::vector<char> used(T.D.size(), 0);
  ExtensionWitness w;
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t r = 0; r < T.D.size(); ++r) {
      if (!used[r] && be.entails(F, T.D[r].prerequisite)) {
        used[r] = 1;
        w.generating.push_back(r);
        F.push_back(T.D[r].consequent);
        changed = true;
      }
    }
  }
  std::sort(w.generating.begin(), w.generating.end());
  return w;
}

void run_r1(Decision& d, const DefaultTheory& T, const std::optional<Formula>& phi,
            ImplicationEngine oracle) {
  check_poly_cap(T);
  auto be = make_backend(oracle, universe(T, phi));
  Collector collect(d.problem, *be, phi);
  collect.offer(T, r1_iteration(*be, T));
  collect.finish(d);
  d.stats.implication_calls = be->calls();
}

void run_reachability(Decision& d, const DefaultTheory& T, const std::optional<Formula>& phi) {
  check_poly_cap(T);
  constexpr std::size_t kTop = 0;
  constexpr std::size_t kBottom = 1;
  std::map<std::string, std::size_t, std::less<>> atoms;
  auto node = [&](const Formula& f) -> std::size_t {
    auto s = conjunctive_form(f);
    switch (s.kind) {
      case ShapeForm::Kind::Top: return kTop;
      case ShapeForm::Kind::Bottom: return kBottom;
      case ShapeForm::Kind::Vars: break;
    }
    if (s.vars.size() != 1) {
      throw Error(ErrorKind::ShapeMismatch, serialize(f) + " is not an atom or a constant");
    }
    auto [it, _] = atoms.emplace(*s.vars.begin(), atoms.size() + 2);
    return it->second;
  };

  std::vector<std::pair<std::size_t, std::size_t>> edges;
  bool w_inconsistent = false;
  for (const auto& w : T.W) {
    const auto n = node(w);
    w_inconsistent = w_inconsistent || n == kBottom;
    edges.emplace_back(kTop, n);
  }
  std::vector<std::size_t> rule_from(T.D.size());
  std::vector<char> usable(T.D.size());
  for (std::size_t r = 0; r < T.D.size(); ++r) {
    rule_from[r] = node(T.D[r].prerequisite);
    usable[r] = node(T.D[r].justification) != kBottom;
    if (usable[r]) {
      edges.emplace_back(rule_from[r], node(T.D[r].consequent));
    }
  }
  const std::size_t goal = phi ? node(*phi) : kTop;

  std::vector<std::vector<std::size_t>> adj(atoms.size() + 2);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
  }
  std::vector<char> seen(adj.size(), 0);
  std::deque<std::size_t> queue{kTop};
  seen[kTop] = 1;
  while (!queue.empty()) {
    const auto u = queue.front();
    queue.pop_front();
    ++d.stats.implication_calls;
    for (auto v : adj[u]) {
      if (!seen[v]) {
        seen[v] = 1;
        queue.push_back(v);
      }
    }
  }

  if (w_inconsistent) {
    d.answer = true;
    if (d.problem != Problem::Skep) {
      d.witness = ExtensionWitness{{}, true};
    }
    return;
  }
  if (seen[kBottom]) {
    d.answer = d.problem == Problem::Skep;
    return;
  }
  ExtensionWitness w;
  for (std::size_t r = 0; r < T.D.size(); ++r) {
    if (usable[r] && seen[rule_from[r]]) {
      w.generating.push_back(r);
    }
  }
  switch (d.problem) {
    case Problem::Ext:
      d.answer = true;
      d.witness = std::move(w);
      break;
    case Problem::Cred:
      d.answer = seen[goal] != 0;
      if (d.answer) {
        d.witness = std::move(w);
      }
      break;
    case Problem::Skep:
      d.answer = seen[goal] != 0;
      if (!d.answer) {
        d.witness = std::move(w);
      }
      break;
  }
}

void require(bool licensed, EngineKind engine, std::string_view clone) {
  if (!licensed) {
    throw Error(ErrorKind::EngineCloneMismatch, "engine " + std::string(to_string(engine)) +
                                                    " needs every connective in " +
                                                    std::string(clone));
  }
}

}  // namespace

std::string_view to_string(EngineChoice e) {
  switch (e) {
    case EngineChoice::Auto: return "auto";
    case EngineChoice::Generic: return "generic";
    case EngineChoice::Monotone: return "monotone";
    case EngineChoice::R1: return "r1";
    case EngineChoice::Affine: return "affine";
    case EngineChoice::Reachability: return "reachability";
  }
  return "?";
}

EngineChoice engine_choice_from_string(std::string_view name) {
  for (auto e : {EngineChoice::Auto, EngineChoice::Generic, EngineChoice::Monotone,
                 EngineChoice::R1, EngineChoice::Affine, EngineChoice::Reachability}) {
    if (to_string(e) == name) {
      return e;
    }
  }
  throw Error(ErrorKind::SyntaxError, "unknown engine '" + std::string(name) + "'");
}

bool is_consistent_W(const DefaultTheory& T) {
  Signature sig;
  for (const auto& w : T.W) {
    collect_connectives(w, sig);
  }
  if (subset_of_clone(sig, Clone::R1)) {
    return true;
  }
  return truth_table_satisfiable(T.W);
}

bool check_stable(const DefaultTheory& T, std::span<const std::size_t> G) {
  auto be = make_backend(ImplicationEngine::Oracle, T.variables());
  return stable_with(*be, T, G);
}

std::vector<ExtensionWitness> enumerate_extensions(const DefaultTheory& T) {
  check_generic_cap(T.D.size(), "defaults");
  auto be = make_backend(ImplicationEngine::Oracle, T.variables());
  std::vector<ExtensionWitness> out;
  for_each_subset(T.D.size(), [&](std::uint64_t mask) {
    const auto G = indices_of(mask);
    if (stable_with(*be, T, G)) {
      out.push_back({G, !be->consistent(generators(T, G))});
    }
    return true;
  });
  return out;
}

ExtensionWitness unique_extension_r1(const DefaultTheory& T) {
  const auto sig = T.used_signature();
  require(subset_of_clone(sig, Clone::R1), EngineKind::R1Unique, "R1");
  check_poly_cap(T);
  auto be = make_backend(select_implication_engine(sig), T.variables());
  return r1_iteration(*be, T);
}

Decision run_engine(EngineKind engine, Problem problem, const DefaultTheory& T,
                    const std::optional<Formula>& phi, std::optional<ImplicationEngine> oracle) {
  if (problem != Problem::Ext && !phi) {
    throw Error(ErrorKind::SyntaxError, std::string(to_string(problem)) + " needs a goal formula");
  }
  const Signature sig = full_signature(T, phi);
  const ImplicationEngine backend = oracle.value_or(select_implication_engine(sig));
  Decision d;
  d.problem = problem;
  d.engine = engine;
  switch (engine) {
    case EngineKind::Generic:
      run_generic(d, T, phi);
      break;
    case EngineKind::AffineGuess:
      if (!oracle) {
        require(subset_of_clone(sig, Clone::L), engine, "L");
      }
      run_guess(d, T, phi, backend);
      break;
    case EngineKind::MonotoneIterative:
      require(subset_of_clone(sig, Clone::M), engine, "M");
      run_monotone(d, T, phi, backend);
      break;
    case EngineKind::R1Unique:
      require(subset_of_clone(sig, Clone::R1), engine, "R1");
      run_r1(d, T, phi, backend);
      break;
    case EngineKind::PolyFragment:
      if (subset_of_clone(sig, Clone::M) &&
          (subset_of_clone(sig, Clone::E) || subset_of_clone(sig, Clone::V))) {
        run_monotone(d, T, phi, backend);
      } else if (subset_of_clone(sig, Clone::R1) && subset_of_clone(sig, Clone::L)) {
        run_r1(d, T, phi, backend);
      } else {
        require(false, engine, "E, V or L1");
      }
      break;
    case EngineKind::Reachability:
      require(subset_of_clone(sig, Clone::I), engine, "I");
      run_reachability(d, T, phi);
      break;
    case EngineKind::TrivialYes:
      require(problem == Problem::Ext && subset_of_clone(sig, Clone::R1), engine,
              "R1 (extension existence only)");
      d.answer = true;
      break;
  }
  return d;
}

namespace {

Decision decide(Problem problem, const DefaultTheory& T, const std::optional<Formula>& phi,
                DecisionOptions options) {
  const Signature sig = full_signature(T, phi);
  std::optional<CloneReport> report;
  std::vector<std::string> warnings;
  try {
    report = dispatch_case(sig);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::ArityUnsupported) {
      throw;
    }
    warnings.push_back("signature has a connective of arity above 3; not classified");
  }

  EngineKind engine = EngineKind::Generic;
  switch (options.engine) {
    case EngineChoice::Auto:
      if (report) {
        engine = report->engine_for(problem);
      } else {
        warnings.push_back("falling back to the generic engine");
      }
      break;
    case EngineChoice::Generic: engine = EngineKind::Generic; break;
    case EngineChoice::Monotone: engine = EngineKind::MonotoneIterative; break;
    case EngineChoice::R1: engine = EngineKind::R1Unique; break;
    case EngineChoice::Affine: engine = EngineKind::AffineGuess; break;
    case EngineChoice::Reachability: engine = EngineKind::Reachability; break;
  }
  Decision d = run_engine(engine, problem, T, phi);
  if (report) {
    d.complexity = report->case_for(problem);
  }
  d.warnings = std::move(warnings);
  return d;
}

}  // namespace

Decision ext(const DefaultTheory& T, DecisionOptions options) {
  return decide(Problem::Ext, T, std::nullopt, options);
}

Decision cred(const DefaultTheory& T, const Formula& phi, DecisionOptions options) {
  return decide(Problem::Cred, T, phi, options);
}

Decision skep(const DefaultTheory& T, const Formula& phi, DecisionOptions options) {
  return decide(Problem::Skep, T, phi, options);
}

}  // namespace clonedl
