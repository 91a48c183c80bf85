#include "selftest.hpp"

#include <random>
#include <string>
#include <vector>

#include <clonedl/engine.hpp>
#include <clonedl/random.hpp>

namespace clonedl::cli {

namespace {

struct Family {
  const char* name;
  Signature signature;
  std::vector<EngineKind> engines;
};

}  // namespace

std::size_t selftest(std::uint64_t seed, unsigned per_family, std::ostream& out) {
  const std::vector<Family> families = {
      {"R1", Signature::of({"and", "or"}), {EngineKind::R1Unique, EngineKind::MonotoneIterative}},
      {"M", Signature::of({"and", "or", "bot", "top"}), {EngineKind::MonotoneIterative}},
      {"L", Signature::of({"xor", "top"}), {EngineKind::AffineGuess}},
      {"I", Signature::of({"id", "bot"}), {EngineKind::Reachability}},
      {"BF", Signature::of({"and", "not"}), {}},
  };
  std::mt19937_64 rng(seed);
  std::size_t failures = 0;
  for (const auto& fam : families) {
    RandomTheoryParams params;
    params.signature = fam.signature;
    std::size_t checks = 0;
    std::size_t bad = 0;
    for (unsigned i = 0; i < per_family; ++i) {
      const auto T = random_theory(rng, params);
      const auto phi = random_formula(rng, fam.signature, variable_names(params.num_vars), 2);
      for (auto p : {Problem::Ext, Problem::Cred, Problem::Skep}) {
        const std::optional<Formula> goal =
            p == Problem::Ext ? std::nullopt : std::optional<Formula>(phi);
        const bool expected = run_engine(EngineKind::Generic, p, T, goal).answer;
        std::vector<Decision> got;
        got.push_back(p == Problem::Ext ? ext(T) : p == Problem::Cred ? cred(T, phi) : skep(T, phi));
        for (auto e : fam.engines) {
          got.push_back(run_engine(e, p, T, goal));
        }
        for (const auto& d : got) {
          ++checks;
          if (d.answer != expected) {
            ++bad;
          }
        }
      }
    }
    out << fam.name << ": " << (checks - bad) << "/" << checks << " agree\n";
    failures += bad;
  }
  out << (failures == 0 ? "selftest passed" : "selftest FAILED") << '\n';
  return failures;
}

}  // namespace clonedl::cli
