#include "clonedl/reductions.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <set>
#include <sstream>

#include "clonedl/error.hpp"

namespace clonedl {

namespace {

Formula var(const std::string& name) { return Formula::var(name); }
Formula constant(std::string_view name) { return Formula::app(builtin(name), {}); }
Formula neg(const Formula& f) { return Formula::app(builtin("not"), {f}); }

Formula big(std::string_view op, std::vector<Formula> args) {
  return balanced_composition(builtin(op), args);
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    out.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  return out;
}

std::vector<std::string> tokens(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) {
    line = line.substr(0, hash);
  }
  std::istringstream in{std::string(line)};
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) {
    out.push_back(tok);
  }
  return out;
}

[[noreturn]] void bad_line(std::size_t line_no, const std::string& msg) {
  throw Error(ErrorKind::SyntaxError, "line " + std::to_string(line_no) + ": " + msg);
}

bool is_node_name(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::string node_var(const std::string& v) { return "_p_" + v; }

void add_unique(std::vector<std::string>& list, std::set<std::string>& seen, const std::string& v) {
  if (seen.insert(v).second) {
    list.push_back(v);
  }
}

std::optional<long> parse_int(std::string_view s) {
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) {
    return std::nullopt;
  }
  return v;
}

}  // namespace

bool cnf_satisfiable(const CnfFormula& phi) {
  if (phi.num_vars > kMaxTableVars) {
    throw Error(ErrorKind::TooManyVariables, std::to_string(phi.num_vars) +
                                                 " variables exceed the cap of " +
                                                 std::to_string(kMaxTableVars));
  }
  for (std::uint32_t a = 0; a < (std::uint32_t{1} << phi.num_vars); ++a) {
    bool all = true;
    for (const auto& clause : phi.clauses) {
      bool any = false;
      for (int lit : clause) {
        const bool value = (a >> (std::abs(lit) - 1)) & 1u;
        any = any || (lit > 0) == value;
      }
      if (!any) {
        all = false;
        break;
      }
    }
    if (all) {
      return true;
    }
  }
  return false;
}

TheoryInstance threesat_to_default(const CnfFormula& phi, ThreeSatMode mode) {
  for (std::size_t i = 0; i < phi.clauses.size(); ++i) {
    const auto& c = phi.clauses[i];
    if (c.size() != 3) {
      throw Error(ErrorKind::NotThreeCnf, "clause " + std::to_string(i + 1) + " has " +
                                              std::to_string(c.size()) + " literals");
    }
    for (int lit : c) {
      if (lit == 0 || static_cast<unsigned>(std::abs(lit)) > phi.num_vars) {
        throw Error(ErrorKind::NotThreeCnf, "clause " + std::to_string(i + 1) +
                                                " has literal " + std::to_string(lit) +
                                                " outside 1.." + std::to_string(phi.num_vars));
      }
    }
  }
  auto x = [](int v) { return var("_x" + std::to_string(v)); };
  auto literal = [&](int lit) { return lit > 0 ? x(lit) : neg(x(-lit)); };
  auto complement = [&](int lit) { return lit > 0 ? neg(x(lit)) : x(-lit); };

  TheoryInstance out;
  auto& T = out.theory;
  T.signature = Signature::of({"not", "top"});
  const Formula top = constant("top");
  for (unsigned i = 1; i <= phi.num_vars; ++i) {
    T.D.push_back({top, x(static_cast<int>(i)), x(static_cast<int>(i))});
  }
  for (unsigned i = 1; i <= phi.num_vars; ++i) {
    T.D.push_back({top, neg(x(static_cast<int>(i))), neg(x(static_cast<int>(i)))});
  }
  for (const auto& c : phi.clauses) {
    std::array<int, 3> pi = {0, 1, 2};
    do {
      T.D.push_back({complement(c[pi[0]]), complement(c[pi[1]]), literal(c[pi[2]])});
    } while (std::next_permutation(pi.begin(), pi.end()));
  }
  if (mode != ThreeSatMode::Ext) {
    const Formula psi = var("_psi");
    out.goal = psi;
    if (mode == ThreeSatMode::Cred) {
      T.W.push_back(psi);
    }
  }
  return eliminate_constant_true(out);
}

void validate(const SnsatInstance& inst) {
  if (inst.formulas.empty()) {
    throw Error(ErrorKind::MalformedChain, "no formulae");
  }
  for (std::size_t i = 0; i < inst.formulas.size(); ++i) {
    const auto& f = inst.formulas[i];
    for (const auto& clause : f.clauses) {
      for (const auto& lit : clause) {
        if (lit.index == 0) {
          throw Error(ErrorKind::MalformedChain, "indices are 1-based");
        }
        if (lit.chain && lit.index > i) {
          throw Error(ErrorKind::MalformedChain, "formula " + std::to_string(i + 1) +
                                                     " mentions x" + std::to_string(lit.index));
        }
        if (!lit.chain && lit.index > f.num_local) {
          throw Error(ErrorKind::MalformedChain, "formula " + std::to_string(i + 1) +
                                                     " mentions z" + std::to_string(lit.index) +
                                                     " beyond its " +
                                                     std::to_string(f.num_local) + " locals");
        }
      }
    }
  }
}

std::vector<bool> snsat_values(const SnsatInstance& inst) {
  validate(inst);
  std::vector<bool> c;
  for (const auto& f : inst.formulas) {
    if (f.num_local > kMaxTableVars) {
      throw Error(ErrorKind::TooManyVariables, std::to_string(f.num_local) +
                                                   " local variables exceed the cap of " +
                                                   std::to_string(kMaxTableVars));
    }
    bool sat = false;
    for (std::uint32_t a = 0; a < (std::uint32_t{1} << f.num_local) && !sat; ++a) {
      sat = std::all_of(f.clauses.begin(), f.clauses.end(), [&](const auto& clause) {
        return std::any_of(clause.begin(), clause.end(), [&](const SnsatLiteral& lit) {
          const bool value = lit.chain ? c[lit.index - 1] : ((a >> (lit.index - 1)) & 1u);
          return value != lit.negated;
        });
      });
    }
    c.push_back(sat);
  }
  return c;
}

bool snsat_eval(const SnsatInstance& inst) { return snsat_values(inst).back(); }

DefaultTheory snsat_to_ext(const SnsatInstance& inst) {
  validate(inst);
  auto x = [](unsigned j, bool primed) {
    return var("_x" + std::to_string(j) + (primed ? "n" : ""));
  };
  auto z = [](std::size_t i, unsigned j, bool primed) {
    return var("_z" + std::to_string(i) + "_" + std::to_string(j) + (primed ? "n" : ""));
  };
  const Formula top = constant("top");
  const Formula bot = constant("bot");
  auto conj = [&](std::vector<Formula> args) { return args.empty() ? top : big("and", args); };
  auto disj = [&](std::vector<Formula> args) { return args.empty() ? bot : big("or", args); };

  DefaultTheory T;
  T.signature = Signature::of({"and", "or", "bot", "top"});
  const std::size_t n = inst.formulas.size();
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& f = inst.formulas[i - 1];
    std::vector<Formula> parts;
    for (const auto& clause : f.clauses) {
      std::vector<Formula> lits;
      for (const auto& lit : clause) {
        lits.push_back(lit.chain ? x(lit.index, lit.negated) : z(i, lit.index, lit.negated));
      }
      parts.push_back(disj(std::move(lits)));
    }
    for (unsigned j = 1; j < i; ++j) {
      parts.push_back(big("or", {x(j, false), x(j, true)}));
    }
    for (unsigned j = 1; j <= f.num_local; ++j) {
      parts.push_back(big("or", {z(i, j, false), z(i, j, true)}));
    }
    T.W.push_back(conj(std::move(parts)));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& f = inst.formulas[i - 1];
    std::vector<Formula> clash;
    for (unsigned j = 1; j <= f.num_local; ++j) {
      clash.push_back(big("and", {z(i, j, false), z(i, j, true)}));
    }
    for (unsigned j = 1; j < i; ++j) {
      clash.push_back(big("and", {x(j, false), x(j, true)}));
    }
    const Formula consequent = i < n ? x(static_cast<unsigned>(i), true) : bot;
    T.D.push_back({disj(std::move(clash)), top, consequent});
  }
  return T;
}

std::vector<std::string> Hypergraph::all_nodes() const {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& v : nodes) {
    add_unique(out, seen, v);
  }
  for (const auto& v : sources) {
    add_unique(out, seen, v);
  }
  for (const auto& e : edges) {
    for (const auto& v : e.sources) {
      add_unique(out, seen, v);
    }
    add_unique(out, seen, e.dest);
  }
  add_unique(out, seen, target);
  return out;
}

bool hgap_reach(const Hypergraph& H) {
  std::set<std::string> reached(H.sources.begin(), H.sources.end());
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& e : H.edges) {
      if (!reached.contains(e.dest) &&
          std::all_of(e.sources.begin(), e.sources.end(),
                      [&](const auto& v) { return reached.contains(v); })) {
        reached.insert(e.dest);
        changed = true;
      }
    }
  }
  return reached.contains(H.target);
}

DefaultTheory hgap_to_ext(const Hypergraph& H, HgapVariant variant) {
  for (const auto& e : H.edges) {
    if (e.sources.empty() || e.sources.size() > 2) {
      throw Error(ErrorKind::SyntaxError, "hyperedges need one or two sources");
    }
  }
  const Formula top = constant("top");
  const Formula bot = constant("bot");
  TheoryInstance out;
  auto& T = out.theory;
  if (variant == HgapVariant::Conjunctive) {
    T.signature = Signature::of({"and", "bot", "top"});
    for (const auto& s : H.sources) {
      T.W.push_back(var(node_var(s)));
    }
    for (const auto& e : H.edges) {
      std::vector<Formula> src;
      for (const auto& v : e.sources) {
        src.push_back(var(node_var(v)));
      }
      T.D.push_back({big("and", src), top, var(node_var(e.dest))});
    }
    T.D.push_back({var(node_var(H.target)), top, bot});
    return eliminate_constant_true(out).theory;
  }

  T.signature = Signature::of({"or", "bot", "top"});
  const auto V = H.all_nodes();
  auto disj_except = [&](const std::set<std::string>& skip, std::string_view what) {
    std::vector<Formula> args;
    for (const auto& v : V) {
      if (!skip.contains(v)) {
        args.push_back(var(node_var(v)));
      }
    }
    if (args.empty()) {
      throw Error(ErrorKind::EmptyDisjunction, std::string(what) + " ranges over no node");
    }
    return big("or", args);
  };
  T.W.push_back(disj_except({H.sources.begin(), H.sources.end()}, "the disjunction in W"));
  for (const auto& e : H.edges) {
    std::set<std::string> src(e.sources.begin(), e.sources.end());
    auto pre = disj_except(src, "an edge prerequisite");
    src.insert(e.dest);
    T.D.push_back({pre, top, disj_except(src, "an edge consequent")});
  }
  T.D.push_back({disj_except({H.target}, "the target prerequisite"), top, bot});
  return eliminate_constant_true(out).theory;
}

TheoryInstance xor_hgap_to_cred(const Hypergraph& H) {
  const Formula top = constant("top");
  auto xor3 = builtin("xor3");
  TheoryInstance out;
  auto& T = out.theory;
  T.signature = Signature::of({"xor3", "top"});
  for (const auto& s : H.sources) {
    T.W.push_back(var(node_var(s)));
  }
  for (std::size_t k = 0; k < H.edges.size(); ++k) {
    const auto& e = H.edges[k];
    const Formula dest = var(node_var(e.dest));
    if (e.sources.size() == 1) {
      T.D.push_back({var(node_var(e.sources[0])), top, dest});
    } else if (e.sources.size() == 2) {
      const Formula a = var(node_var(e.sources[0]));
      const Formula b = var(node_var(e.sources[1]));
      const Formula pe = var("_e" + std::to_string(k + 1));
      T.D.push_back({a, top, pe});
      T.D.push_back({b, top, pe});
      T.D.push_back({Formula::app(xor3, {a, b, pe}), top, dest});
    } else {
      throw Error(ErrorKind::SyntaxError, "hyperedges need one or two sources");
    }
  }
  out.goal = var(node_var(H.target));
  return eliminate_constant_true(out);
}

bool gap_reach(const Digraph& G) {
  std::set<std::string> reached{G.source};
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [u, v] : G.edges) {
      if (reached.contains(u) && reached.insert(v).second) {
        changed = true;
      }
    }
  }
  return reached.contains(G.target);
}

TheoryInstance gap_to_default(const Digraph& G, GapMode mode) {
  TheoryInstance out;
  auto& T = out.theory;
  T.signature = mode == GapMode::Ext ? Signature::of({"id", "bot"}) : Signature::of({"id"});
  T.W.push_back(var(node_var(G.source)));
  for (const auto& [u, v] : G.edges) {
    T.D.push_back({var(node_var(u)), var(node_var(u)), var(node_var(v))});
  }
  const Formula pt = var(node_var(G.target));
  if (mode == GapMode::Ext) {
    T.D.push_back({pt, pt, constant("bot")});
  } else {
    out.goal = pt;
  }
  return out;
}

TheoryInstance imp_to_cred(std::vector<Formula> A, Formula phi, Signature signature) {
  TheoryInstance out;
  out.theory.W = std::move(A);
  out.theory.signature = std::move(signature);
  out.goal = std::move(phi);
  return out;
}

CnfFormula parse_dimacs(std::string_view text) {
  CnfFormula out;
  bool header = false;
  std::size_t declared_clauses = 0;
  std::vector<int> current;
  const auto lines = split_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    auto toks = tokens(lines[n]);
    if (toks.empty() || toks[0] == "c" || toks[0] == "%") {
      continue;
    }
    if (toks[0] == "p") {
      if (header || toks.size() != 4 || toks[1] != "cnf") {
        bad_line(n + 1, "expected a single 'p cnf VARS CLAUSES' header");
      }
      auto v = parse_int(toks[2]);
      auto c = parse_int(toks[3]);
      if (!v || !c || *v < 0 || *c < 0) {
        bad_line(n + 1, "bad header counts");
      }
      out.num_vars = static_cast<unsigned>(*v);
      declared_clauses = static_cast<std::size_t>(*c);
      header = true;
      continue;
    }
    if (!header) {
      bad_line(n + 1, "clause before the 'p cnf' header");
    }
    for (const auto& t : toks) {
      auto lit = parse_int(t);
      if (!lit) {
        bad_line(n + 1, "bad literal '" + t + "'");
      }
      if (*lit == 0) {
        out.clauses.push_back(std::move(current));
        current.clear();
      } else {
        if (static_cast<unsigned long>(std::labs(*lit)) > out.num_vars) {
          bad_line(n + 1, "literal " + t + " exceeds the declared variable count");
        }
        current.push_back(static_cast<int>(*lit));
      }
    }
  }
  if (!current.empty()) {
    out.clauses.push_back(std::move(current));
  }
  if (!header) {
    throw Error(ErrorKind::SyntaxError, "missing 'p cnf' header");
  }
  if (out.clauses.size() != declared_clauses) {
    throw Error(ErrorKind::SyntaxError, "header declares " + std::to_string(declared_clauses) +
                                            " clauses, found " +
                                            std::to_string(out.clauses.size()));
  }
  return out;
}

Digraph parse_digraph(std::string_view text) {
  Digraph G;
  const auto lines = split_lines(text);
  auto check = [](std::size_t n, const std::string& v) {
    if (!is_node_name(v)) {
      bad_line(n, "invalid node name '" + v + "'");
    }
    return v;
  };
  for (std::size_t n = 0; n < lines.size(); ++n) {
    auto toks = tokens(lines[n]);
    if (toks.empty()) {
      continue;
    }
    if (toks[0] == "source" && toks.size() == 2) {
      G.source = check(n + 1, toks[1]);
    } else if (toks[0] == "target" && toks.size() == 2) {
      G.target = check(n + 1, toks[1]);
    } else if (toks[0] == "edge" && toks.size() == 3) {
      G.edges.emplace_back(check(n + 1, toks[1]), check(n + 1, toks[2]));
    } else if (toks[0] == "nodes") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        G.nodes.push_back(check(n + 1, toks[i]));
      }
    } else {
      bad_line(n + 1, "expected 'source S', 'target T', 'edge U V' or 'nodes ...'");
    }
  }
  if (G.source.empty() || G.target.empty()) {
    throw Error(ErrorKind::SyntaxError, "graph needs a source and a target");
  }
  return G;
}

Hypergraph parse_hypergraph(std::string_view text) {
  Hypergraph H;
  const auto lines = split_lines(text);
  auto check = [](std::size_t n, const std::string& v) {
    if (!is_node_name(v)) {
      bad_line(n, "invalid node name '" + v + "'");
    }
    return v;
  };
  bool have_target = false;
  for (std::size_t n = 0; n < lines.size(); ++n) {
    auto toks = tokens(lines[n]);
    if (toks.empty()) {
      continue;
    }
    if (toks[0] == "sources") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        H.sources.push_back(check(n + 1, toks[i]));
      }
    } else if (toks[0] == "target" && toks.size() == 2) {
      H.target = check(n + 1, toks[1]);
      have_target = true;
    } else if (toks[0] == "nodes") {
      for (std::size_t i = 1; i < toks.size(); ++i) {
        H.nodes.push_back(check(n + 1, toks[i]));
      }
    } else if (toks[0] == "edge" && (toks.size() == 4 || toks.size() == 5) &&
               toks[toks.size() - 2] == "->") {
      Hyperedge e;
      for (std::size_t i = 1; i + 2 < toks.size(); ++i) {
        e.sources.push_back(check(n + 1, toks[i]));
      }
      if (e.sources.size() == 2 && e.sources[0] == e.sources[1]) {
        e.sources.pop_back();
      }
      e.dest = check(n + 1, toks.back());
      H.edges.push_back(std::move(e));
    } else {
      bad_line(n + 1, "expected 'sources ...', 'target T', 'edge A [B] -> C' or 'nodes ...'");
    }
  }
  if (!have_target) {
    throw Error(ErrorKind::SyntaxError, "hypergraph needs a target");
  }
  return H;
}

SnsatInstance parse_snsat(std::string_view text) {
  SnsatInstance inst;
  const auto lines = split_lines(text);
  for (std::size_t n = 0; n < lines.size(); ++n) {
    auto toks = tokens(lines[n]);
    if (toks.empty()) {
      continue;
    }
    if (toks[0] == "phi") {
      SnsatFormula f;
      if (toks.size() == 3 && toks[1] == "locals") {
        auto m = parse_int(toks[2]);
        if (!m || *m < 0) {
          bad_line(n + 1, "bad local count");
        }
        f.num_local = static_cast<unsigned>(*m);
      } else if (toks.size() != 1) {
        bad_line(n + 1, "expected 'phi' or 'phi locals M'");
      }
      inst.formulas.push_back(std::move(f));
      continue;
    }
    if (inst.formulas.empty()) {
      bad_line(n + 1, "clause before the first 'phi'");
    }
    auto& f = inst.formulas.back();
    std::vector<SnsatLiteral> clause;
    if (!(toks.size() == 1 && toks[0] == "false")) {
      for (const auto& t : toks) {
        std::string_view s = t;
        SnsatLiteral lit;
        if (!s.empty() && s[0] == '-') {
          lit.negated = true;
          s.remove_prefix(1);
        }
        if (s.empty() || (s[0] != 'x' && s[0] != 'z')) {
          bad_line(n + 1, "bad literal '" + t + "'");
        }
        lit.chain = s[0] == 'x';
        auto idx = parse_int(s.substr(1));
        if (!idx || *idx <= 0) {
          bad_line(n + 1, "bad literal '" + t + "'");
        }
        lit.index = static_cast<unsigned>(*idx);
        if (!lit.chain) {
          f.num_local = std::max(f.num_local, lit.index);
        }
        clause.push_back(lit);
      }
    }
    f.clauses.push_back(std::move(clause));
  }
  validate(inst);
  return inst;
}

}  // namespace clonedl
