#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clonedl/theory.hpp"

namespace clonedl {

/// CNF over variables 1..num_vars; literal v > 0 is x_v, -v is its negation.
struct CnfFormula {
  unsigned num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

/// Brute force; throws TooManyVariables beyond kMaxTableVars.
bool cnf_satisfiable(const CnfFormula& phi);

enum class ThreeSatMode { Ext, Cred, Skep };

/// Ext: <{}, D_phi>, satisfiable iff an extension exists.
/// Cred: <{psi}, D_phi> with goal psi, satisfiable iff psi is credulous.
/// Skep: <{}, D_phi> with goal psi, unsatisfiable iff psi is skeptical.
/// Built over {not, top}, then constant true is eliminated. Variable x_i
/// becomes `_x<i>` and psi is `_psi`. Throws NotThreeCnf.
TheoryInstance threesat_to_default(const CnfFormula& phi, ThreeSatMode mode);

/// A literal of an SNSAT formula: chain variable x_index or local z_index
/// (both 1-based).
struct SnsatLiteral {
  bool chain = false;
  unsigned index = 1;
  bool negated = false;
};

struct SnsatFormula {
  unsigned num_local = 0;
  std::vector<std::vector<SnsatLiteral>> clauses;
};

struct SnsatInstance {
  std::vector<SnsatFormula> formulas;
};

/// Throws MalformedChain if formula i mentions x_j with j >= i, a local
/// beyond num_local, or the instance is empty.
void validate(const SnsatInstance& inst);
/// c_1..c_n.
std::vector<bool> snsat_values(const SnsatInstance& inst);
/// c_n.
bool snsat_eval(const SnsatInstance& inst);

/// Monotone theory over {and, or, bot, top}. Variables: x_j is `_x<j>`, its
/// primed copy `_x<j>n`; z_ij is `_z<i>_<j>` and `_z<i>_<j>n`.
DefaultTheory snsat_to_ext(const SnsatInstance& inst);

struct Hyperedge {
  std::vector<std::string> sources;
  std::string dest;
};

struct Hypergraph {
  /// Node order; endpoints are added on demand.
  std::vector<std::string> nodes;
  std::vector<Hyperedge> edges;
  std::vector<std::string> sources;
  std::string target;

  /// Declared nodes followed by any other node mentioned, in first-use order.
  std::vector<std::string> all_nodes() const;
};

/// Forward chaining from the sources.
bool hgap_reach(const Hypergraph& H);

enum class HgapVariant { Conjunctive, Disjunctive };

/// Reachable iff the image has no extension. Conjunctive: over {and, bot};
/// disjunctive: over {or, bot}; both after eliminating constant true. Node v
/// becomes `_p_<v>`. Disjunctive throws EmptyDisjunction when a disjunction
/// would range over no node.
DefaultTheory hgap_to_ext(const Hypergraph& H, HgapVariant variant);

/// Reachable iff p_t is credulous. Over {xor3} after eliminating constant
/// true; two-source edge k gets the variable `_e<k>`.
TheoryInstance xor_hgap_to_cred(const Hypergraph& H);

struct Digraph {
  std::vector<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
  std::string source;
  std::string target;
};

bool gap_reach(const Digraph& G);

enum class GapMode { Ext, Cred };

/// Ext: over {id, bot}, reachable iff no extension. Cred: over {id}, goal
/// p_t, reachable iff credulous.
TheoryInstance gap_to_default(const Digraph& G, GapMode mode);

/// (<A, {}>, phi).
TheoryInstance imp_to_cred(std::vector<Formula> A, Formula phi, Signature signature);

/// DIMACS CNF: `c` comments, a `p cnf VARS CLAUSES` header, 0-terminated
/// clauses.
CnfFormula parse_dimacs(std::string_view text);
/// Lines `source S`, `target T`, `edge U V`, `nodes N...`.
Digraph parse_digraph(std::string_view text);
/// Lines `sources S...`, `target T`, `edge A [B] -> C`, `nodes N...`.
Hypergraph parse_hypergraph(std::string_view text);
/// Sections opened by `phi` (optionally `phi locals M`); each following line
/// is a clause of tokens `x3`, `-x3`, `z1`, `-z1`; a line `false` is the
/// empty clause.
SnsatInstance parse_snsat(std::string_view text);

}  // namespace clonedl
