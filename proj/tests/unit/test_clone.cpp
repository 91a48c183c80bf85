#include <gtest/gtest.h>

#include <algorithm>

#include <clonedl/clone.hpp>
#include <clonedl/error.hpp>

#include "golden.hpp"

namespace clonedl {
namespace {

FunSignature sig_of(std::string_view name) { return function_signature(*builtin(name)); }

TEST(FunctionSignature, And) {
  auto s = sig_of("and");
  EXPECT_TRUE(s.monotone);
  EXPECT_TRUE(s.reproducing0);
  EXPECT_TRUE(s.reproducing1);
  EXPECT_FALSE(s.linear);
  EXPECT_TRUE(s.separating1);
  EXPECT_FALSE(s.separating0);
  EXPECT_TRUE(s.is_and_shape);
  EXPECT_FALSE(s.is_or_shape);
}

TEST(FunctionSignature, Not) {
  auto s = sig_of("not");
  EXPECT_TRUE(s.self_dual);
  EXPECT_TRUE(s.linear);
  EXPECT_FALSE(s.monotone);
  EXPECT_TRUE(s.linear_constant);
  EXPECT_EQ(s.linear_vars, std::vector<unsigned>{0});
}

TEST(FunctionSignature, Majority) {
  auto s = sig_of("maj");
  EXPECT_TRUE(s.self_dual);
  EXPECT_TRUE(s.monotone);
  EXPECT_FALSE(s.linear);
  EXPECT_EQ(s.depends_on.size(), 3u);
}

TEST(FunctionSignature, DummyVariablesAndConstants) {
  auto proj = function_signature(BoolFun("p", 2, "0101"));
  EXPECT_TRUE(proj.is_projection);
  EXPECT_EQ(proj.depends_on, std::vector<unsigned>{0});
  auto top = sig_of("top");
  EXPECT_TRUE(top.is_constant);
  EXPECT_TRUE(top.reproducing1);
  EXPECT_FALSE(top.reproducing0);
  EXPECT_FALSE(top.separating0);
  EXPECT_FALSE(top.separating1);
  EXPECT_TRUE(sig_of("xor3").linear);
  EXPECT_TRUE(sig_of("dbase").self_dual);
  EXPECT_TRUE(sig_of("imp").separating0);
  EXPECT_TRUE(sig_of("nimp").separating1);
}

TEST(Slice3, Identity) {
  auto s = slice3_closure(Signature::of({"id"}));
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.contains(Slice3::kX));
  EXPECT_TRUE(s.contains(Slice3::kY));
  EXPECT_TRUE(s.contains(Slice3::kZ));
}

TEST(Slice3, FullBase) { EXPECT_EQ(slice3_closure(Signature::of({"and", "not"})).size(), 256u); }

TEST(Slice3, Disjunctions) {
  auto s = slice3_closure(Signature::of({"or"}));
  EXPECT_EQ(s.size(), 7u);
  const std::uint8_t x = Slice3::kX, y = Slice3::kY, z = Slice3::kZ;
  for (std::uint8_t t : {x, y, z, std::uint8_t(x | y), std::uint8_t(x | z), std::uint8_t(y | z),
                         std::uint8_t(x | y | z)}) {
    EXPECT_TRUE(s.contains(t));
  }
}

TEST(Slice3, MonotoneInTheBase) {
  const std::vector<std::vector<std::string_view>> chain = {
      {"or"}, {"or", "and"}, {"or", "and", "bot"}, {"or", "and", "bot", "not"}};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    Signature a, b;
    for (auto n : chain[i]) a.add(builtin(n));
    for (auto n : chain[i + 1]) b.add(builtin(n));
    EXPECT_TRUE(slice3_closure(a).is_subset_of(slice3_closure(b)));
  }
}

TEST(Slice3, ClosureIsIdempotent) {
  for (auto base : {std::vector<std::string_view>{"xor"}, {"maj"}, {"s00"}, {"not", "bot"}}) {
    Signature b;
    for (auto n : base) b.add(builtin(n));
    auto s = slice3_closure(b);
    Signature members;
    int k = 0;
    for (auto t : s.members()) {
      members.add(std::make_shared<BoolFun>("m" + std::to_string(k++), TruthTable::from_bits([&] {
                                              std::string bits;
                                              for (int i = 0; i < 8; ++i) bits += ((t >> i) & 1) ? '1' : '0';
                                              return bits;
                                            }())));
    }
    EXPECT_EQ(slice3_closure(members), s);
  }
}

TEST(Slice3, ArityAboveThreeIsRejected) {
  Signature b;
  b.add(std::make_shared<BoolFun>("and4", 4, "0000000000000001"));
  EXPECT_THROW(slice3_closure(b), Error);
  try {
    dispatch_case(b);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ArityUnsupported);
  }
}

TEST(LiftToTernary, AddsDummyVariables) {
  EXPECT_EQ(lift_to_ternary(*builtin("and")), Slice3::kX & Slice3::kY);
  EXPECT_EQ(lift_to_ternary(*builtin("top")), 0xFF);
  EXPECT_EQ(lift_to_ternary(*builtin("not")), std::uint8_t(~Slice3::kX));
}

TEST(ContainsClone, Examples) {
  EXPECT_TRUE(contains_clone(slice3_closure(Signature::of({"and", "not"})), Clone::S1));
  EXPECT_FALSE(contains_clone(slice3_closure(Signature::of({"or"})), Clone::E2));
  EXPECT_TRUE(contains_clone(slice3_closure(Signature::of({"maj"})), Clone::D2));
  EXPECT_THROW(contains_clone(slice3_closure(Signature::of({"or"})), Clone::BF), Error);
}

TEST(SubsetOfClone, Examples) {
  EXPECT_TRUE(subset_of_clone(Signature::of({"or", "top"}), Clone::R1));
  EXPECT_TRUE(subset_of_clone(Signature::of({"xor"}), Clone::L));
  EXPECT_FALSE(subset_of_clone(Signature::of({"xor"}), Clone::M));
  EXPECT_TRUE(subset_of_clone(Signature::of({"s10"}), Clone::M));
  EXPECT_THROW(subset_of_clone(Signature::of({"or"}), Clone::S1), Error);
}

TEST(CloneNames, RoundTrip) {
  for (auto c : {Clone::BF, Clone::S11, Clone::L3, Clone::V0, Clone::I2}) {
    EXPECT_EQ(clone_from_string(to_string(c)), c);
  }
  try {
    clone_from_string("Q7");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownClone);
  }
}

TEST(Dispatch, Examples) {
  auto bf = dispatch_case(Signature::of({"and", "not"}));
  EXPECT_EQ(bf.ext_case, ComplexityCase::SigmaP2);
  EXPECT_EQ(bf.ext_engine, EngineKind::Generic);

  auto v2 = dispatch_case(Signature::of({"or"}));
  EXPECT_EQ(v2.ext_case, ComplexityCase::Trivial);
  EXPECT_EQ(v2.cred_case, ComplexityCase::P);

  EXPECT_EQ(dispatch_case(Signature::of({"id", "bot"})).ext_case, ComplexityCase::NL);
}

TEST(Dispatch, NegationOnly) {
  auto r = dispatch_case(Signature::of({"not"}));
  EXPECT_EQ(r.ext_case, ComplexityCase::NP);
  EXPECT_EQ(r.cred_case, ComplexityCase::NP);
  EXPECT_EQ(r.skep_case, ComplexityCase::CoNP);
  EXPECT_EQ(r.ext_engine, EngineKind::AffineGuess);
}

TEST(Dispatch, MonotoneWithConstants) {
  auto r = dispatch_case(Signature::of({"and", "or", "bot"}));
  EXPECT_EQ(r.ext_case, ComplexityCase::DeltaP2);
  EXPECT_EQ(r.cred_case, ComplexityCase::DeltaP2);
  EXPECT_EQ(r.skep_case, ComplexityCase::DeltaP2);
  EXPECT_EQ(r.ext_engine, EngineKind::MonotoneIterative);
}

TEST(Dispatch, EmptySignatureBehavesLikeProjections) {
  auto r = dispatch_case(Signature{});
  EXPECT_EQ(r.ext_case, ComplexityCase::Trivial);
  EXPECT_EQ(r.cred_case, ComplexityCase::NL);
}

TEST(Dispatch, GoldenRowsForSmallBases) {
  for (const auto& row : testing::golden_table()) {
    SCOPED_TRACE(std::string(row.row));
    auto r = dispatch_case(testing::golden_signature(row));
    for (auto c : kSubsetClones) {
      const bool want = std::find(row.subset.begin(), row.subset.end(), c) != row.subset.end();
      EXPECT_EQ(r.is_subset(c), want) << "subset " << to_string(c);
    }
    for (auto c : kContainsClones) {
      const bool want = std::find(row.contains.begin(), row.contains.end(), c) != row.contains.end();
      EXPECT_EQ(r.does_contain(c), want) << "contains " << to_string(c);
    }
    EXPECT_EQ(r.ext_case, row.ext);
    EXPECT_EQ(r.cred_case, row.cred);
    EXPECT_EQ(r.skep_case, row.skep);
  }
}

TEST(Dispatch, EnginesFollowCases) {
  for (const auto& row : testing::golden_table()) {
    auto r = dispatch_case(testing::golden_signature(row));
    for (auto p : {Problem::Ext, Problem::Cred, Problem::Skep}) {
      switch (r.case_for(p)) {
        case ComplexityCase::SigmaP2:
        case ComplexityCase::PiP2: EXPECT_EQ(r.engine_for(p), EngineKind::Generic); break;
        case ComplexityCase::DeltaP2:
          EXPECT_EQ(r.engine_for(p), EngineKind::MonotoneIterative);
          break;
        case ComplexityCase::NL: EXPECT_EQ(r.engine_for(p), EngineKind::Reachability); break;
        case ComplexityCase::P: EXPECT_EQ(r.engine_for(p), EngineKind::PolyFragment); break;
        case ComplexityCase::Trivial: EXPECT_EQ(r.engine_for(p), EngineKind::TrivialYes); break;
        default: break;
      }
    }
  }
}

}  // namespace
}  // namespace clonedl
