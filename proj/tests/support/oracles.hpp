#pragma once

// Independent reference implementations used by the tests. They work on model
// sets (truth tables) and share no code with the engines beyond formula
// evaluation.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <random>
#include <set>
#include <string>
#include <vector>

#include <clonedl/reductions.hpp>
#include <clonedl/theory.hpp>

namespace clonedl::testing {

inline VariableOrder order_of(const DefaultTheory& T, const Formula* extra = nullptr) {
  auto vars = T.variables();
  if (extra) {
    collect_variables(*extra, vars);
  }
  return VariableOrder::of(vars);
}

inline TruthTable models(const std::vector<Formula>& fs, const VariableOrder& order) {
  auto acc = TruthTable::constant(static_cast<unsigned>(order.size()), true);
  for (const auto& f : fs) {
    acc &= table_of(f, order);
  }
  return acc;
}

/// Reiter's Gamma operator on model sets: the least set of models containing
/// W's consequences and closed under the rules whose justification is
/// consistent with `E`.
inline TruthTable gamma(const DefaultTheory& T, const TruthTable& E, const VariableOrder& order) {
  TruthTable M = models(T.W, order);
  std::vector<char> used(T.D.size(), 0);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t r = 0; r < T.D.size(); ++r) {
      const auto& d = T.D[r];
      if (!used[r] && M.implies(table_of(d.prerequisite, order)) &&
          E.intersects(table_of(d.justification, order))) {
        used[r] = 1;
        M &= table_of(d.consequent, order);
        changed = true;
      }
    }
  }
  return M;
}

/// Model sets of all stable extensions, found as fixpoints E = Gamma(E) over
/// the candidates Th(W u concl(G)).
inline std::vector<TruthTable> semantic_extensions(const DefaultTheory& T,
                                                   const VariableOrder& order) {
  std::vector<TruthTable> out;
  const std::size_t n = T.D.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<Formula> gens = T.W;
    for (std::size_t r = 0; r < n; ++r) {
      if ((mask >> r) & 1u) {
        gens.push_back(T.D[r].consequent);
      }
    }
    const auto E = models(gens, order);
    if (gamma(T, E, order) == E && std::find(out.begin(), out.end(), E) == out.end()) {
      out.push_back(E);
    }
  }
  return out;
}

struct SemanticAnswers {
  bool ext = false;
  bool cred = false;
  bool skep = true;
};

inline SemanticAnswers semantic_answers(const DefaultTheory& T, const Formula& phi) {
  const auto order = order_of(T, &phi);
  const auto goal = table_of(phi, order);
  SemanticAnswers a;
  for (const auto& E : semantic_extensions(T, order)) {
    a.ext = true;
    const bool in = E.implies(goal);
    a.cred = a.cred || in;
    a.skep = a.skep && in;
  }
  return a;
}

/// All 3-CNF formulae over x1..x3 with one to three clauses, one per orbit
/// under renaming variables. A clause is a nonempty set of
/// literals over distinct variables, padded to three by repeating its last
/// literal.
inline std::vector<CnfFormula> all_3cnf() {
  using Clause = std::vector<int>;
  std::vector<Clause> clauses;
  for (int code = 1; code < 27; ++code) {
    Clause c;
    for (int v = 1, rest = code; v <= 3; ++v, rest /= 3) {
      if (rest % 3 == 1) {
        c.push_back(v);
      } else if (rest % 3 == 2) {
        c.push_back(-v);
      }
    }
    clauses.push_back(c);
  }
  auto canonical = [](std::vector<Clause> f) {
    std::vector<Clause> best;
    std::array<int, 3> perm = {1, 2, 3};
    do {
      std::vector<Clause> g;
      for (const auto& c : f) {
        Clause d;
        for (int lit : c) {
          d.push_back(lit < 0 ? -perm[-lit - 1] : perm[lit - 1]);
        }
        std::sort(d.begin(), d.end());
        g.push_back(d);
      }
      std::sort(g.begin(), g.end());
      if (best.empty() || g < best) {
        best = g;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
  };
  std::set<std::vector<Clause>> seen;
  const std::size_t n = clauses.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b <= n; ++b) {
      for (std::size_t c = b; c <= n; ++c) {
        if ((b == n && c != n) || (b < n && c < n && c == b) || (b == a && b < n)) {
          continue;
        }
        std::vector<Clause> f{clauses[a]};
        if (b < n) {
          f.push_back(clauses[b]);
        }
        if (c < n) {
          f.push_back(clauses[c]);
        }
        seen.insert(canonical(f));
      }
    }
  }
  std::vector<CnfFormula> out;
  for (const auto& f : seen) {
    CnfFormula cnf{3, {}};
    for (auto c : f) {
      while (c.size() < 3) {
        c.push_back(c.back());
      }
      cnf.clauses.push_back(c);
    }
    out.push_back(std::move(cnf));
  }
  return out;
}

inline Digraph random_digraph(std::mt19937_64& rng, unsigned max_nodes) {
  const unsigned n = std::uniform_int_distribution<unsigned>(1, max_nodes)(rng);
  Digraph G;
  for (unsigned i = 0; i < n; ++i) {
    G.nodes.push_back("v" + std::to_string(i));
  }
  std::bernoulli_distribution edge(0.25);
  for (unsigned u = 0; u < n; ++u) {
    for (unsigned v = 0; v < n; ++v) {
      if (u != v && edge(rng)) {
        G.edges.emplace_back(G.nodes[u], G.nodes[v]);
      }
    }
  }
  std::uniform_int_distribution<unsigned> node(0, n - 1);
  G.source = G.nodes[node(rng)];
  G.target = G.nodes[node(rng)];
  return G;
}

/// Hypergraph with at most `max_nodes` nodes and `max_edges` edges of one or
/// two sources. With `proper_for_disjunction`, S is a proper subset of V and
/// no edge covers V, so every disjunction of the disjunctive reduction is
/// nonempty.
inline Hypergraph random_hypergraph(std::mt19937_64& rng, unsigned max_nodes, unsigned max_edges,
                                    bool proper_for_disjunction) {
  const unsigned n = std::uniform_int_distribution<unsigned>(proper_for_disjunction ? 4 : 1,
                                                             max_nodes)(rng);
  Hypergraph H;
  for (unsigned i = 0; i < n; ++i) {
    H.nodes.push_back("v" + std::to_string(i));
  }
  std::uniform_int_distribution<unsigned> node(0, n - 1);
  const unsigned m = std::uniform_int_distribution<unsigned>(0, max_edges)(rng);
  for (unsigned k = 0; k < m; ++k) {
    Hyperedge e;
    e.sources.push_back(H.nodes[node(rng)]);
    if (std::bernoulli_distribution(0.5)(rng)) {
      auto b = H.nodes[node(rng)];
      if (b != e.sources[0]) {
        e.sources.push_back(b);
      }
    }
    e.dest = H.nodes[node(rng)];
    H.edges.push_back(std::move(e));
  }
  H.target = H.nodes[node(rng)];
  std::bernoulli_distribution in_s(0.3);
  for (const auto& v : H.nodes) {
    if (in_s(rng)) {
      H.sources.push_back(v);
    }
  }
  if (H.sources.empty()) {
    H.sources.push_back(H.nodes[node(rng)]);
  }
  if (proper_for_disjunction && H.sources.size() == n) {
    H.sources.pop_back();
  }
  return H;
}

/// n <= 3 formulae, each over at most 4 variables (chain plus locals), with
/// at most 20 variables in the image.
inline SnsatInstance random_snsat(std::mt19937_64& rng) {
  SnsatInstance inst;
  const unsigned n = std::uniform_int_distribution<unsigned>(1, 3)(rng);
  unsigned budget = 10 - (n - 1);
  for (unsigned i = 1; i <= n; ++i) {
    SnsatFormula f;
    const unsigned max_local = std::min(4 - (i - 1), budget - (n - i));
    f.num_local = std::uniform_int_distribution<unsigned>(1, std::max(1u, max_local))(rng);
    budget -= f.num_local;
    const unsigned vars = f.num_local + (i - 1);
    const unsigned clauses = std::uniform_int_distribution<unsigned>(1, 4)(rng);
    for (unsigned c = 0; c < clauses; ++c) {
      std::vector<SnsatLiteral> clause;
      const unsigned width = std::uniform_int_distribution<unsigned>(1, 3)(rng);
      for (unsigned w = 0; w < width; ++w) {
        const unsigned v = std::uniform_int_distribution<unsigned>(1, vars)(rng);
        SnsatLiteral lit;
        lit.chain = v <= i - 1;
        lit.index = lit.chain ? v : v - (i - 1);
        lit.negated = std::bernoulli_distribution(0.5)(rng);
        clause.push_back(lit);
      }
      f.clauses.push_back(std::move(clause));
    }
    inst.formulas.push_back(std::move(f));
  }
  return inst;
}

}  // namespace clonedl::testing
