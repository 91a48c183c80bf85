#include <gtest/gtest.h>

#include <random>

#include <clonedl/engine.hpp>
#include <clonedl/error.hpp>
#include <clonedl/random.hpp>

#include "oracles.hpp"

namespace clonedl {
namespace {

TheoryInstance T_(std::string_view text) { return parse_theory(text); }

Formula goal(const TheoryInstance& inst) { return *inst.goal; }

TEST(ConsistentW, Examples) {
  EXPECT_FALSE(is_consistent_W(T_("W:\nx\n(not x)\n").theory));
  EXPECT_TRUE(is_consistent_W(DefaultTheory{}));
  EXPECT_TRUE(is_consistent_W(T_("W:\n(or x y)\n").theory));
}

TEST(CheckStable, Examples) {
  auto T = T_("W:\np\nD:\n(default p q q)\n").theory;
  const std::size_t zero[] = {0};
  EXPECT_TRUE(check_stable(T, zero));
  EXPECT_FALSE(check_stable(T, {}));
  auto bad = T_("W:\nx\n(not x)\nD:\n(default x y z)\n").theory;
  EXPECT_TRUE(check_stable(bad, {}));
  EXPECT_TRUE(check_stable(bad, zero));
}

TEST(Ext, MonotoneRuleWithFalseConsequent) {
  auto T = T_("signature: and bot top\nW:\nx\nD:\n(default x y (bot))\n").theory;
  auto d = ext(T);
  EXPECT_FALSE(d.answer);
  EXPECT_EQ(d.engine, EngineKind::PolyFragment);
  EXPECT_FALSE(run_engine(EngineKind::MonotoneIterative, Problem::Ext, T, std::nullopt).answer);
  EXPECT_FALSE(run_engine(EngineKind::Generic, Problem::Ext, T, std::nullopt).answer);
}

TEST(Ext, EmptyTheory) {
  EXPECT_TRUE(ext(DefaultTheory{}).answer);
  auto d = ext(DefaultTheory{}, {EngineChoice::Generic});
  EXPECT_TRUE(d.answer);
  ASSERT_TRUE(d.witness);
  EXPECT_TRUE(d.witness->generating.empty());
  EXPECT_FALSE(d.witness->inconsistent);
}

TEST(Ext, PathFromSourceToFalse) {
  auto T = T_("signature: id bot\nW:\np_s\nD:\n(default p_s p_s p_t)\n(default p_t p_t (bot))\n")
               .theory;
  auto d = ext(T);
  EXPECT_FALSE(d.answer);
  EXPECT_EQ(d.engine, EngineKind::Reachability);
  EXPECT_EQ(d.complexity, ComplexityCase::NL);
  EXPECT_TRUE(skep(T, Formula::var("q")).answer);
  EXPECT_FALSE(cred(T, Formula::var("q")).answer);
}

TEST(UniqueR1, Examples) {
  EXPECT_EQ(unique_extension_r1(T_("W:\nx\nD:\n(default x y y)\n").theory).generating,
            std::vector<std::size_t>{0});
  EXPECT_TRUE(unique_extension_r1(T_("D:\n(default x x y)\n").theory).generating.empty());
  EXPECT_TRUE(
      unique_extension_r1(T_("W:\n(or x y)\nD:\n(default x (top) z)\n").theory).generating.empty());
}

TEST(Cred, Examples) {
  auto a = T_("W:\np\ngoal: p\n");
  EXPECT_TRUE(cred(a.theory, goal(a)).answer);
  auto g = T_("W:\np_s\nD:\n(default p_s p_s p_t)\ngoal: p_t\n");
  auto d = cred(g.theory, goal(g));
  EXPECT_TRUE(d.answer);
  EXPECT_EQ(d.engine, EngineKind::Reachability);
  EXPECT_TRUE(run_engine(EngineKind::Generic, Problem::Cred, g.theory, goal(g)).answer);
}

TEST(Skep, Examples) {
  auto a = T_("W:\np\ngoal: q\n");
  EXPECT_FALSE(skep(a.theory, goal(a)).answer);
  auto two = T_("D:\n(default (top) (not b) a)\n(default (top) (not a) b)\ngoal: (or a b)\n");
  EXPECT_TRUE(skep(two.theory, goal(two)).answer);
  EXPECT_FALSE(skep(two.theory, Formula::var("a")).answer);
  EXPECT_TRUE(cred(two.theory, Formula::var("a")).answer);
  EXPECT_EQ(enumerate_extensions(two.theory).size(), 2u);
}

TEST(Witness, InconsistentW) {
  auto T = T_("W:\nx\n(not x)\nD:\n(default x y z)\n").theory;
  for (auto choice : {EngineChoice::Auto, EngineChoice::Generic}) {
    auto d = ext(T, {choice});
    EXPECT_TRUE(d.answer);
    ASSERT_TRUE(d.witness);
    EXPECT_TRUE(d.witness->inconsistent);
  }
  // Monotone W that is inconsistent still has the inconsistent extension.
  auto M = T_("signature: and or bot top\nW:\n(bot)\nD:\n(default (top) x (bot))\n").theory;
  EXPECT_TRUE(ext(M).answer);
  EXPECT_TRUE(run_engine(EngineKind::MonotoneIterative, Problem::Ext, M, std::nullopt).answer);
}

TEST(Enumerate, OrderIsBySizeThenMask) {
  auto T = T_("D:\n(default (top) a a)\n(default (top) b b)\n").theory;
  auto all = enumerate_extensions(T);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].generating, (std::vector<std::size_t>{0, 1}));
}

TEST(Errors, EngineMismatchIsRefused) {
  auto T = T_("W:\n(not x)\n").theory;
  for (auto choice : {EngineChoice::Monotone, EngineChoice::R1, EngineChoice::Reachability}) {
    try {
      ext(T, {choice});
      FAIL() << to_string(choice);
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::EngineCloneMismatch);
    }
  }
  EXPECT_NO_THROW(ext(T, {EngineChoice::Affine}));
  auto bf = T_("W:\n(and x (not y))\n").theory;
  EXPECT_THROW(ext(bf, {EngineChoice::Affine}), Error);
  EXPECT_THROW(run_engine(EngineKind::TrivialYes, Problem::Ext, bf, std::nullopt), Error);
}

TEST(Errors, TooManyDefaults) {
  DefaultTheory T;
  T.signature = Signature::of({"and", "not"});
  for (int i = 0; i < 21; ++i) {
    auto v = Formula::var("x" + std::to_string(i));
    T.D.push_back({v, Formula::app(builtin("not"), {v}), v});
  }
  try {
    ext(T, {EngineChoice::Generic});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DefaultCountTooLarge);
    EXPECT_TRUE(e.is_cap_exceeded());
  }
}

TEST(Errors, GoalIsRequired) {
  EXPECT_THROW(run_engine(EngineKind::Generic, Problem::Cred, DefaultTheory{}, std::nullopt),
               Error);
}

TEST(Dispatch, HighArityFallsBackToGeneric) {
  auto inst = T_("defconn and4 4 0000000000000001\nW:\n(and4 a b c d)\nD:\n(default a e e)\n");
  auto d = ext(inst.theory);
  EXPECT_TRUE(d.answer);
  EXPECT_EQ(d.engine, EngineKind::Generic);
  EXPECT_FALSE(d.complexity);
  EXPECT_FALSE(d.warnings.empty());
}

TEST(Properties, R1CredEqualsSkep) {
  std::mt19937_64 rng(21);
  RandomTheoryParams params;
  params.signature = Signature::of({"and", "or", "imp"});
  for (int i = 0; i < 100; ++i) {
    auto T = random_theory(rng, params);
    auto phi = random_formula(rng, params.signature, variable_names(params.num_vars), 2);
    EXPECT_EQ(cred(T, phi).answer, skep(T, phi).answer);
  }
}

TEST(Properties, MonotoneWithoutExtension) {
  std::mt19937_64 rng(22);
  RandomTheoryParams params;
  params.signature = Signature::of({"and", "or", "bot", "top"});
  params.constant_rate = 0.3;
  int none = 0;
  for (int i = 0; i < 200; ++i) {
    auto T = random_theory(rng, params);
    auto phi = random_formula(rng, params.signature, variable_names(params.num_vars), 2);
    const bool e = ext(T).answer;
    const bool c = cred(T, phi).answer;
    const bool s = skep(T, phi).answer;
    if (e) {
      EXPECT_EQ(c, s);
    } else {
      ++none;
      EXPECT_FALSE(c);
      EXPECT_TRUE(s);
    }
  }
  EXPECT_GT(none, 0);
}

TEST(Semantics, GenericMatchesGammaOracle) {
  std::mt19937_64 rng(23);
  RandomTheoryParams params;
  params.signature = Signature::of({"and", "or", "not", "top"});
  params.num_vars = 3;
  for (int i = 0; i < 150; ++i) {
    auto T = random_theory(rng, params);
    auto phi = random_formula(rng, params.signature, variable_names(params.num_vars), 2);
    auto want = testing::semantic_answers(T, phi);
    EXPECT_EQ(ext(T).answer, want.ext);
    EXPECT_EQ(cred(T, phi).answer, want.cred);
    EXPECT_EQ(skep(T, phi).answer, want.skep);

    const auto order = testing::order_of(T, &phi);
    auto ref = testing::semantic_extensions(T, order);
    auto got = enumerate_extensions(T);
    std::vector<TruthTable> tables;
    for (const auto& w : got) {
      std::vector<Formula> gens = T.W;
      for (auto r : w.generating) {
        gens.push_back(T.D[r].consequent);
      }
      auto t = testing::models(gens, order);
      if (std::find(tables.begin(), tables.end(), t) == tables.end()) {
        tables.push_back(t);
      }
    }
    EXPECT_EQ(tables.size(), ref.size());
    for (const auto& t : tables) {
      EXPECT_NE(std::find(ref.begin(), ref.end(), t), ref.end());
    }
  }
}

TEST(Stats, AreReported) {
  auto T = T_("W:\np\nD:\n(default p (not q) r)\n(default r q q)\n").theory;
  auto d = ext(T, {EngineChoice::Generic});
  EXPECT_GT(d.stats.subsets_checked, 0u);
  EXPECT_GT(d.stats.implication_calls, 0u);
}

TEST(Names, EngineChoices) {
  for (auto c : {EngineChoice::Auto, EngineChoice::Generic, EngineChoice::Monotone,
                 EngineChoice::R1, EngineChoice::Affine, EngineChoice::Reachability}) {
    EXPECT_EQ(engine_choice_from_string(to_string(c)), c);
  }
  EXPECT_THROW(engine_choice_from_string("fast"), Error);
}

}  // namespace
}  // namespace clonedl
