#include <gtest/gtest.h>

#include <random>

#include <clonedl/error.hpp>
#include <clonedl/implication.hpp>
#include <clonedl/random.hpp>

namespace clonedl {
namespace {

Formula P(std::string_view text) {
  static const Signature sig = Signature::of(
      {"and", "or", "not", "xor", "eq", "xor3", "imp", "top", "bot", "id", "maj"});
  return parse(text, sig);
}

std::vector<Formula> Ps(std::initializer_list<std::string_view> texts) {
  std::vector<Formula> out;
  for (auto t : texts) {
    out.push_back(P(t));
  }
  return out;
}

bool imp(std::initializer_list<std::string_view> premises, std::string_view goal,
         ImplicationEngine e) {
  ImplicationQuery q{Ps(premises), P(goal), {}};
  for (const auto& f : q.premises) {
    collect_connectives(f, q.signature);
  }
  collect_connectives(q.goal, q.signature);
  return implies(q, e);
}

TEST(Oracle, Examples) {
  using E = ImplicationEngine;
  EXPECT_TRUE(imp({"x"}, "x", E::Oracle));
  EXPECT_TRUE(imp({"(and x y)"}, "y", E::Oracle));
  // Adding the two rows gives x xor z = 0, so the chain entails eq, not xor.
  EXPECT_FALSE(imp({"(xor x y)", "(xor y z)"}, "(xor x z)", E::Oracle));
  EXPECT_TRUE(imp({"(xor x y)", "(xor y z)"}, "(eq x z)", E::Oracle));
  EXPECT_TRUE(imp({}, "(or x (not x))", E::Oracle));
  EXPECT_TRUE(imp({"x", "(not x)"}, "y", E::Oracle));
  EXPECT_FALSE(imp({"(or x y)"}, "x", E::Oracle));
}

TEST(Affine, Examples) {
  using E = ImplicationEngine;
  EXPECT_TRUE(imp({"(xor x y)"}, "(xor y x)", E::Affine));
  EXPECT_FALSE(imp({"x"}, "(xor x y)", E::Affine));
  EXPECT_TRUE(imp({"x", "(eq x y)"}, "y", E::Affine));
  EXPECT_FALSE(imp({"(xor x y)", "(xor y z)"}, "(xor x z)", E::Affine));
  EXPECT_TRUE(imp({"(xor x y)", "(xor y z)"}, "(eq x z)", E::Affine));
  EXPECT_TRUE(imp({"x", "(not x)"}, "y", E::Affine));
  EXPECT_TRUE(imp({}, "(top)", E::Affine));
  EXPECT_FALSE(imp({}, "(bot)", E::Affine));
}

TEST(Affine, FormsAreNormalized) {
  auto f = affine_form(P("(xor (xor x y) (not x))"));
  EXPECT_EQ(f.vars, VarSet{"y"});
  EXPECT_TRUE(f.constant);
  auto g = affine_form(P("(xor3 x y (eq x y))"));
  EXPECT_TRUE(g.vars.empty());
  EXPECT_TRUE(g.constant);
  // Non-linear connectives are fine when the formula as a whole is affine.
  auto h = affine_form(P("(xor (and x y) (and x y))"));
  EXPECT_TRUE(h.vars.empty());
  EXPECT_FALSE(h.constant);
}

TEST(Affine, NonAffineIsRejected) {
  try {
    affine_form(P("(and x y)"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAffine);
  }
  EXPECT_THROW(imp({"(or x y)"}, "x", ImplicationEngine::Affine), Error);
}

TEST(AffineSystem, RankAndInconsistency) {
  AffineSystem s;
  // Each form is asserted equal to 1: x+y = 1, y+z = 1, x+z+1 = 1.
  s.add({{"x", "y"}, false});
  s.add({{"y", "z"}, false});
  s.add({{"x", "z"}, true});
  EXPECT_EQ(s.rank(), 2u);
  EXPECT_FALSE(s.inconsistent());
  EXPECT_TRUE(s.entails({{"x", "z"}, false}, false));
  EXPECT_FALSE(s.entails({{"x"}, false}));
  EXPECT_FALSE(s.entails({{"w"}, false}));
  s.add({{"x", "z"}, false});
  EXPECT_TRUE(s.inconsistent());
  EXPECT_TRUE(s.entails({{"w"}, false}));
}

TEST(Shape, Examples) {
  using E = ImplicationEngine;
  EXPECT_TRUE(imp({"(and x y)"}, "x", E::Conjunctive));
  EXPECT_TRUE(imp({"(or x y)"}, "(or (or x y) z)", E::Disjunctive));
  EXPECT_TRUE(imp({"(or x y)", "z"}, "(or z x)", E::Disjunctive));
  EXPECT_FALSE(imp({"(or x y)"}, "x", E::Disjunctive));
  EXPECT_FALSE(imp({"(and x y)"}, "z", E::Conjunctive));
  EXPECT_TRUE(imp({"(bot)"}, "z", E::Disjunctive));
  EXPECT_TRUE(imp({"(and x (bot))"}, "z", E::Conjunctive));
}

TEST(Shape, Forms) {
  auto c = conjunctive_form(P("(and (and x (top)) (and y x))"));
  EXPECT_EQ(c.kind, ShapeForm::Kind::Vars);
  EXPECT_EQ(c.vars, (VarSet{"x", "y"}));
  EXPECT_EQ(disjunctive_form(P("(or x (top))")).kind, ShapeForm::Kind::Top);
  EXPECT_EQ(disjunctive_form(P("(or (bot) (bot))")).kind, ShapeForm::Kind::Bottom);
  try {
    conjunctive_form(P("(or x y)"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ShapeMismatch);
  }
  EXPECT_THROW(disjunctive_form(P("(xor x y)")), Error);
}

TEST(Select, PicksByFragment) {
  EXPECT_EQ(select_implication_engine(Signature::of({"xor", "top"})), ImplicationEngine::Affine);
  EXPECT_EQ(select_implication_engine(Signature::of({"and", "bot"})),
            ImplicationEngine::Conjunctive);
  EXPECT_EQ(select_implication_engine(Signature::of({"or"})), ImplicationEngine::Disjunctive);
  EXPECT_EQ(select_implication_engine(Signature::of({"and", "or"})), ImplicationEngine::Oracle);
  EXPECT_EQ(implication_engine_from_string("affine"), ImplicationEngine::Affine);
  EXPECT_THROW(implication_engine_from_string("sat"), Error);
}

TEST(Oracle, CapIsEnforced) {
  std::vector<Formula> premises;
  for (const auto& v : variable_names(21)) {
    premises.push_back(Formula::var(v));
  }
  try {
    truth_table_implies(premises, P("x1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooManyVariables);
  }
  // The affine engine has no such cap.
  EXPECT_TRUE(affine_implies(premises, P("x1")));
}

void random_agreement(const Signature& sig, ImplicationEngine engine, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 300; ++i) {
    const unsigned n = 1 + i % 6;
    auto names = variable_names(n);
    std::vector<Formula> A;
    const int k = std::uniform_int_distribution<int>(0, 4)(rng);
    for (int j = 0; j < k; ++j) {
      A.push_back(random_formula(rng, sig, names, 3, 0.1));
    }
    auto goal = random_formula(rng, sig, names, 3, 0.1);
    ImplicationQuery q{A, goal, sig};
    ASSERT_EQ(implies(q, engine), truth_table_implies(A, goal)) << serialize(goal);
  }
}

TEST(Agreement, AffineMatchesOracle) {
  random_agreement(Signature::of({"xor", "not", "eq", "top", "bot"}), ImplicationEngine::Affine, 1);
}
TEST(Agreement, ConjunctiveMatchesOracle) {
  random_agreement(Signature::of({"and", "top", "bot"}), ImplicationEngine::Conjunctive, 2);
}
TEST(Agreement, DisjunctiveMatchesOracle) {
  random_agreement(Signature::of({"or", "top", "bot"}), ImplicationEngine::Disjunctive, 3);
}

TEST(Backend, CountsCallsAndNegates) {
  auto b = make_backend(ImplicationEngine::Affine, {"x", "y"});
  auto prem = Ps({"(xor x y)", "x"});
  EXPECT_TRUE(b->entails(prem, P("(not y)")));
  EXPECT_TRUE(b->entails(prem, P("y"), true));
  EXPECT_FALSE(b->entails(prem, P("(xor x y)"), true));
  EXPECT_TRUE(b->consistent(prem));
  EXPECT_EQ(b->calls(), 4u);

  auto t = make_backend(ImplicationEngine::Oracle, {"x", "y"});
  EXPECT_TRUE(t->entails(Ps({"(and x y)"}), P("(or x y)")));
  EXPECT_FALSE(t->consistent(Ps({"x", "(not x)"})));

  auto c = make_backend(ImplicationEngine::Conjunctive, {"x", "y"});
  EXPECT_THROW(c->entails(Ps({"x"}), P("y"), true), Error);
}

}  // namespace
}  // namespace clonedl
