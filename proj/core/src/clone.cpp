#include "clonedl/clone.hpp"

#include <algorithm>
#include <array>

#include "clonedl/error.hpp"

namespace clonedl {

namespace {

constexpr std::array<std::uint8_t, 3> kProjections = {Slice3::kX, Slice3::kY, Slice3::kZ};

// Applies a connective of arity <= 3, given by its minterms, to byte tables.
std::uint8_t apply_bytes(const std::vector<unsigned>& minterms, unsigned arity,
                         const std::array<std::uint8_t, 3>& args) {
  std::uint8_t out = 0;
  for (auto m : minterms) {
    std::uint8_t term = 0xFF;
    for (unsigned j = 0; j < arity; ++j) {
      term &= ((m >> j) & 1u) ? args[j] : static_cast<std::uint8_t>(~args[j]);
    }
    out |= term;
  }
  return out;
}

std::vector<unsigned> minterms_of(const BoolFun& f) {
  std::vector<unsigned> out;
  for (unsigned m = 0; m < (1u << f.arity()); ++m) {
    if (f(m)) {
      out.push_back(m);
    }
  }
  return out;
}

bool has_property(const FunSignature& s, Clone c) {
  switch (c) {
    case Clone::R1: return s.reproducing1;
    case Clone::M: return s.monotone;
    case Clone::L: return s.linear;
    case Clone::L1: return s.linear && s.reproducing1;
    case Clone::V: return s.is_or_shape;
    case Clone::E: return s.is_and_shape;
    case Clone::N: return s.depends_on.size() <= 1;
    case Clone::I: return s.is_projection || s.is_constant;
    default: break;
  }
  throw Error(ErrorKind::UnknownClone,
              std::string(to_string(c)) + " is not decided by connective properties");
}

}  // namespace

FunSignature function_signature(const BoolFun& f) {
  const unsigned n = f.arity();
  const std::size_t rows = std::size_t{1} << n;
  const std::size_t full = rows - 1;
  FunSignature s;

  s.reproducing0 = !f(0);
  s.reproducing1 = f(full);

  s.monotone = true;
  s.self_dual = true;
  std::size_t ones_and = full;
  std::size_t zeros_or = 0;
  bool any_one = false;
  bool any_zero = false;
  for (std::size_t a = 0; a < rows; ++a) {
    const bool v = f(a);
    if (v) {
      ones_and &= a;
      any_one = true;
    } else {
      zeros_or |= a;
      any_zero = true;
    }
    if (f(full & ~a) == v) {
      s.self_dual = false;
    }
    for (unsigned j = 0; j < n && s.monotone; ++j) {
      if (!((a >> j) & 1u) && v && !f(a | (std::size_t{1} << j))) {
        s.monotone = false;
      }
    }
  }
  s.separating1 = n > 0 && (!any_one || ones_and != 0);
  s.separating0 = n > 0 && (!any_zero || zeros_or != full);

  for (unsigned j = 0; j < n; ++j) {
    const std::size_t bit = std::size_t{1} << j;
    for (std::size_t a = 0; a < rows; ++a) {
      if (!(a & bit) && f(a) != f(a | bit)) {
        s.depends_on.push_back(j);
        break;
      }
    }
  }
  s.is_constant = s.depends_on.empty();
  s.is_projection = false;
  if (s.depends_on.size() == 1) {
    const std::size_t bit = std::size_t{1} << s.depends_on.front();
    s.is_projection = !f(0) && f(bit);
  }

  std::size_t mask = 0;
  for (auto j : s.depends_on) {
    mask |= std::size_t{1} << j;
  }
  s.is_and_shape = true;
  s.is_or_shape = true;
  if (!s.is_constant) {
    for (std::size_t a = 0; a < rows; ++a) {
      if (f(a) != ((a & mask) == mask)) {
        s.is_and_shape = false;
      }
      if (f(a) != ((a & mask) != 0)) {
        s.is_or_shape = false;
      }
    }
  }

  // Algebraic normal form by the binary Moebius transform.
  std::vector<std::uint8_t> anf(rows);
  for (std::size_t a = 0; a < rows; ++a) {
    anf[a] = f(a);
  }
  for (unsigned j = 0; j < n; ++j) {
    const std::size_t bit = std::size_t{1} << j;
    for (std::size_t a = 0; a < rows; ++a) {
      if (a & bit) {
        anf[a] ^= anf[a ^ bit];
      }
    }
  }
  s.linear = true;
  for (std::size_t a = 0; a < rows; ++a) {
    if (anf[a] && (a & (a - 1)) != 0) {
      s.linear = false;
      break;
    }
  }
  if (s.linear) {
    s.linear_constant = anf[0] != 0;
    for (unsigned j = 0; j < n; ++j) {
      if (anf[std::size_t{1} << j]) {
        s.linear_vars.push_back(j);
      }
    }
  }
  return s;
}

std::string_view to_string(Clone c) {
  switch (c) {
    case Clone::BF: return "BF";
    case Clone::R0: return "R0";
    case Clone::R1: return "R1";
    case Clone::M: return "M";
    case Clone::S0: return "S0";
    case Clone::S1: return "S1";
    case Clone::S00: return "S00";
    case Clone::S10: return "S10";
    case Clone::S11: return "S11";
    case Clone::D: return "D";
    case Clone::D2: return "D2";
    case Clone::L: return "L";
    case Clone::L0: return "L0";
    case Clone::L1: return "L1";
    case Clone::L2: return "L2";
    case Clone::L3: return "L3";
    case Clone::V: return "V";
    case Clone::V2: return "V2";
    case Clone::E: return "E";
    case Clone::E2: return "E2";
    case Clone::N: return "N";
    case Clone::N2: return "N2";
    case Clone::I: return "I";
    case Clone::I2: return "I2";
    case Clone::E0: return "E0";
    case Clone::V0: return "V0";
    case Clone::I0: return "I0";
  }
  return "?";
}

Clone clone_from_string(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(Clone::I0); ++i) {
    if (to_string(static_cast<Clone>(i)) == name) {
      return static_cast<Clone>(i);
    }
  }
  throw Error(ErrorKind::UnknownClone, std::string(name));
}

Signature clone_base(Clone c) {
  switch (c) {
    case Clone::BF: return Signature::of({"and", "not"});
    case Clone::R0: return Signature::of({"and", "xor"});
    case Clone::R1: return Signature::of({"or", "eq"});
    case Clone::M: return Signature::of({"or", "and", "bot", "top"});
    case Clone::S0: return Signature::of({"imp"});
    case Clone::S1: return Signature::of({"nimp"});
    case Clone::S00: return Signature::of({"s00"});
    case Clone::S10: return Signature::of({"s10"});
    case Clone::S11: return Signature::of({"s10", "bot"});
    case Clone::D: return Signature::of({"dbase"});
    case Clone::D2: return Signature::of({"maj"});
    case Clone::L: return Signature::of({"xor", "top"});
    case Clone::L0: return Signature::of({"xor"});
    case Clone::L1: return Signature::of({"eq"});
    case Clone::L2: return Signature::of({"xor3"});
    case Clone::L3: return Signature::of({"xor3", "not"});
    case Clone::V: return Signature::of({"or", "bot", "top"});
    case Clone::V2: return Signature::of({"or"});
    case Clone::E: return Signature::of({"and", "bot", "top"});
    case Clone::E2: return Signature::of({"and"});
    case Clone::N: return Signature::of({"not", "bot", "top"});
    case Clone::N2: return Signature::of({"not"});
    case Clone::I: return Signature::of({"id", "bot", "top"});
    case Clone::I2: return Signature::of({"id"});
    default: break;
  }
  throw Error(ErrorKind::UnknownClone, std::string(to_string(c)) + " has no tabulated base");
}

std::vector<std::uint8_t> Slice3::members() const {
  std::vector<std::uint8_t> out;
  for (unsigned t = 0; t < 256; ++t) {
    if (members_.test(t)) {
      out.push_back(static_cast<std::uint8_t>(t));
    }
  }
  return out;
}

std::uint8_t lift_to_ternary(const BoolFun& f) {
  if (f.arity() > 3) {
    throw Error(ErrorKind::ArityUnsupported,
                "'" + f.name() + "' has arity " + std::to_string(f.arity()));
  }
  if (f.arity() == 0) {
    return f(0) ? 0xFF : 0x00;
  }
  return apply_bytes(minterms_of(f), f.arity(), kProjections);
}

Slice3 slice3_closure(const Signature& B) {
  struct Gen {
    std::vector<unsigned> minterms;
    unsigned arity;
  };
  std::vector<Gen> gens;
  Slice3 slice;
  std::vector<std::uint8_t> all;
  auto add = [&](std::uint8_t t, std::vector<std::uint8_t>& into) {
    if (!slice.members_.test(t)) {
      slice.members_.set(t);
      into.push_back(t);
    }
  };
  for (auto p : kProjections) {
    add(p, all);
  }
  for (const auto& f : B.connectives()) {
    if (f->arity() > 3) {
      throw Error(ErrorKind::ArityUnsupported,
                  "'" + f->name() + "' has arity " + std::to_string(f->arity()));
    }
    if (f->arity() == 0) {
      add(lift_to_ternary(*f), all);
    } else {
      gens.push_back({minterms_of(*f), f->arity()});
    }
  }

  // Semi-naive fixpoint: each round only visits tuples with at least one
  // member added in the previous round.
  std::size_t frontier_begin = 0;
  while (frontier_begin < all.size() && slice.size() < 256) {
    const std::size_t frontier_end = all.size();
    std::vector<std::uint8_t> fresh;
    for (const auto& g : gens) {
      const unsigned k = g.arity;
      for (unsigned p = 0; p < k; ++p) {
        std::array<std::size_t, 3> lo{}, hi{};
        for (unsigned j = 0; j < k; ++j) {
          if (j < p) {
            lo[j] = 0;
            hi[j] = frontier_begin;
          } else if (j == p) {
            lo[j] = frontier_begin;
            hi[j] = frontier_end;
          } else {
            lo[j] = 0;
            hi[j] = frontier_end;
          }
          if (lo[j] == hi[j]) {
            goto next_position;
          }
        }
        {
          std::array<std::size_t, 3> idx = lo;
          std::array<std::uint8_t, 3> args{};
          for (;;) {
            for (unsigned j = 0; j < k; ++j) {
              args[j] = all[idx[j]];
            }
            add(apply_bytes(g.minterms, k, args), fresh);
            unsigned j = 0;
            while (j < k && ++idx[j] == hi[j]) {
              idx[j] = lo[j];
              ++j;
            }
            if (j == k) {
              break;
            }
          }
        }
      next_position:;
      }
    }
    frontier_begin = frontier_end;
    all.insert(all.end(), fresh.begin(), fresh.end());
  }
  return slice;
}

bool contains_clone(const Slice3& slice, Clone c) {
  if (std::find(kContainsClones.begin(), kContainsClones.end(), c) == kContainsClones.end()) {
    throw Error(ErrorKind::UnknownClone,
                std::string(to_string(c)) + " is not decided by ternary-slice containment");
  }
  for (const auto& f : clone_base(c).connectives()) {
    if (!slice.contains(lift_to_ternary(*f))) {
      return false;
    }
  }
  return true;
}

bool subset_of_clone(const Signature& B, Clone c) {
  if (std::find(kSubsetClones.begin(), kSubsetClones.end(), c) == kSubsetClones.end()) {
    throw Error(ErrorKind::UnknownClone,
                std::string(to_string(c)) + " is not decided by connective properties");
  }
  for (const auto& f : B.connectives()) {
    if (!has_property(function_signature(*f), c)) {
      return false;
    }
  }
  return true;
}

std::string_view to_string(Problem p) {
  switch (p) {
    case Problem::Ext: return "ext";
    case Problem::Cred: return "cred";
    case Problem::Skep: return "skep";
  }
  return "?";
}

std::string_view to_string(ComplexityCase c) {
  switch (c) {
    case ComplexityCase::SigmaP2: return "SigmaP2";
    case ComplexityCase::PiP2: return "PiP2";
    case ComplexityCase::DeltaP2: return "DeltaP2";
    case ComplexityCase::NP: return "NP";
    case ComplexityCase::CoNP: return "coNP";
    case ComplexityCase::P: return "P";
    case ComplexityCase::NL: return "NL";
    case ComplexityCase::Trivial: return "trivial";
  }
  return "?";
}

std::string_view to_string(EngineKind e) {
  switch (e) {
    case EngineKind::Generic: return "generic";
    case EngineKind::MonotoneIterative: return "monotone_iterative";
    case EngineKind::R1Unique: return "r1_unique";
    case EngineKind::AffineGuess: return "affine_guess";
    case EngineKind::PolyFragment: return "poly_fragment";
    case EngineKind::Reachability: return "reachability";
    case EngineKind::TrivialYes: return "trivial_yes";
  }
  return "?";
}

bool CloneReport::is_subset(Clone c) const {
  for (const auto& [k, v] : subset) {
    if (k == c) {
      return v;
    }
  }
  throw Error(ErrorKind::UnknownClone, std::string(to_string(c)));
}

bool CloneReport::does_contain(Clone c) const {
  for (const auto& [k, v] : contains) {
    if (k == c) {
      return v;
    }
  }
  throw Error(ErrorKind::UnknownClone, std::string(to_string(c)));
}

ComplexityCase CloneReport::case_for(Problem p) const {
  switch (p) {
    case Problem::Ext: return ext_case;
    case Problem::Cred: return cred_case;
    case Problem::Skep: return skep_case;
  }
  return ext_case;
}

EngineKind CloneReport::engine_for(Problem p) const {
  switch (p) {
    case Problem::Ext: return ext_engine;
    case Problem::Cred: return cred_engine;
    case Problem::Skep: return skep_engine;
  }
  return ext_engine;
}

namespace {

template <typename T>
T first_match(std::initializer_list<std::pair<bool, T>> cases, std::string_view problem) {
  std::optional<T> hit;
  int matches = 0;
  for (const auto& [cond, value] : cases) {
    if (cond) {
      ++matches;
      if (!hit) {
        hit = value;
      }
    }
  }
  if (matches != 1) {
    throw std::logic_error("classification for " + std::string(problem) + " matched " +
                           std::to_string(matches) + " cases");
  }
  return *hit;
}

}  // namespace

CloneReport dispatch_case(const Signature& B) {
  CloneReport r;
  for (const auto& f : B.connectives()) {
    r.properties.emplace_back(f->name(), function_signature(*f));
  }
  const Slice3 slice = slice3_closure(B);
  for (auto c : kSubsetClones) {
    bool all = true;
    for (const auto& [_, s] : r.properties) {
      all = all && has_property(s, c);
    }
    r.subset.emplace_back(c, all);
  }
  for (auto c : kContainsClones) {
    r.contains.emplace_back(c, contains_clone(slice, c));
  }

  auto sub = [&](Clone c) { return r.is_subset(c); };
  auto con = [&](Clone c) { return r.does_contain(c); };

  const bool sigma = con(Clone::S1) || con(Clone::D);
  const bool delta = con(Clone::S11) && sub(Clone::M);
  // [B] in {N, N2, L, L0, L3}: affine clones containing negation or xor.
  const bool affine_hard = sub(Clone::L) && (con(Clone::N2) || con(Clone::L0));
  // [B] in {E, E0, V, V0}.
  const bool ev_zero = ((con(Clone::E2) && sub(Clone::E)) || (con(Clone::V2) && sub(Clone::V))) &&
                       !sub(Clone::R1);
  const bool i_zero = sub(Clone::I) && !sub(Clone::R1);
  const bool r1_hard =
      sub(Clone::R1) && (con(Clone::S00) || con(Clone::S10) || con(Clone::D2));
  const bool fragment_p = (con(Clone::V2) && sub(Clone::V)) ||
                          (con(Clone::E2) && sub(Clone::E)) ||
                          (con(Clone::L2) && sub(Clone::L1));

  using C = ComplexityCase;
  r.ext_case = first_match<C>({{sigma, C::SigmaP2},
                               {delta, C::DeltaP2},
                               {affine_hard, C::NP},
                               {ev_zero, C::P},
                               {i_zero, C::NL},
                               {sub(Clone::R1), C::Trivial}},
                              "ext");
  r.cred_case = first_match<C>({{sigma, C::SigmaP2},
                                {delta, C::DeltaP2},
                                {r1_hard, C::CoNP},
                                {affine_hard, C::NP},
                                {fragment_p, C::P},
                                {sub(Clone::I), C::NL}},
                               "cred");
  r.skep_case = first_match<C>({{sigma, C::PiP2},
                                {delta, C::DeltaP2},
                                {r1_hard || affine_hard, C::CoNP},
                                {fragment_p, C::P},
                                {sub(Clone::I), C::NL}},
                               "skep");

  auto engine = [&](C c) {
    switch (c) {
      case C::SigmaP2:
      case C::PiP2: return EngineKind::Generic;
      case C::DeltaP2: return EngineKind::MonotoneIterative;
      case C::NP: return EngineKind::AffineGuess;
      case C::CoNP: return sub(Clone::R1) ? EngineKind::R1Unique : EngineKind::AffineGuess;
      case C::P: return EngineKind::PolyFragment;
      case C::NL: return EngineKind::Reachability;
      case C::Trivial: return EngineKind::TrivialYes;
    }
    return EngineKind::Generic;
  };
  r.ext_engine = engine(r.ext_case);
  r.cred_engine = engine(r.cred_case);
  r.skep_engine = engine(r.skep_case);
  return r;
}

}  // namespace clonedl
