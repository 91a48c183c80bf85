#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include <clonedl/clonedl.hpp>

namespace {

using namespace clonedl;

void BM_SliceClosure(benchmark::State& state) {
  static const Clone clones[] = {Clone::BF, Clone::M, Clone::L, Clone::D2, Clone::I2};
  const auto base = clone_base(clones[state.range(0)]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(slice3_closure(base));
  }
  state.SetLabel(std::string(to_string(clones[state.range(0)])));
}
BENCHMARK(BM_SliceClosure)->DenseRange(0, 4);

void BM_Dispatch(benchmark::State& state) {
  const auto base = clone_base(Clone::S11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dispatch_case(base));
  }
}
BENCHMARK(BM_Dispatch);

// Affine implication against the truth-table oracle on xor chains.
std::vector<Formula> xor_chain(unsigned n) {
  const auto names = variable_names(n);
  const auto x = builtin("xor");
  std::vector<Formula> out;
  for (unsigned i = 0; i + 1 < n; ++i) {
    out.push_back(Formula::app(x, {Formula::var(names[i]), Formula::var(names[i + 1])}));
  }
  return out;
}

void BM_ImplicationAffine(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto premises = xor_chain(n);
  const auto goal = Formula::var(variable_names(n)[0]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(affine_implies(premises, goal));
  }
}
BENCHMARK(BM_ImplicationAffine)->RangeMultiplier(2)->Range(4, 256);

void BM_ImplicationOracle(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto premises = xor_chain(n);
  const auto goal = Formula::var(variable_names(n)[0]);
  for (auto _ : state) {
    benchmark::DoNotOptimize(truth_table_implies(premises, goal));
  }
}
BENCHMARK(BM_ImplicationOracle)->DenseRange(4, 16, 4);

std::vector<DefaultTheory> sample(const Signature& sig, unsigned vars, unsigned rules) {
  std::mt19937_64 rng(5);
  RandomTheoryParams params;
  params.signature = sig;
  params.num_vars = vars;
  params.max_d = rules;
  params.max_w = 2;
  std::vector<DefaultTheory> out;
  for (int i = 0; i < 32; ++i) {
    out.push_back(random_theory(rng, params));
  }
  return out;
}

void run_ext(benchmark::State& state, const Signature& sig, EngineKind engine) {
  const auto theories = sample(sig, 6, static_cast<unsigned>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& T = theories[i++ % theories.size()];
    benchmark::DoNotOptimize(run_engine(engine, Problem::Ext, T, std::nullopt).answer);
  }
}

void BM_ExtGenericMonotone(benchmark::State& state) {
  run_ext(state, Signature::of({"and", "or", "bot", "top"}), EngineKind::Generic);
}
BENCHMARK(BM_ExtGenericMonotone)->DenseRange(2, 10, 4);

void BM_ExtMonotoneIterative(benchmark::State& state) {
  run_ext(state, Signature::of({"and", "or", "bot", "top"}), EngineKind::MonotoneIterative);
}
BENCHMARK(BM_ExtMonotoneIterative)->DenseRange(2, 10, 4);

void BM_ExtGenericAffine(benchmark::State& state) {
  run_ext(state, Signature::of({"xor", "top"}), EngineKind::Generic);
}
BENCHMARK(BM_ExtGenericAffine)->DenseRange(2, 10, 4);

void BM_ExtAffineGuess(benchmark::State& state) {
  run_ext(state, Signature::of({"xor", "top"}), EngineKind::AffineGuess);
}
BENCHMARK(BM_ExtAffineGuess)->DenseRange(2, 10, 4);

// Path graphs: the reachability engine is linear, the generic one is not.
TheoryInstance path_instance(int n) {
  Digraph G;
  for (int i = 0; i < n; ++i) {
    G.nodes.push_back("v" + std::to_string(i));
  }
  for (int i = 0; i + 1 < n; ++i) {
    G.edges.emplace_back(G.nodes[i], G.nodes[i + 1]);
  }
  G.source = G.nodes.front();
  G.target = G.nodes.back();
  return gap_to_default(G, GapMode::Ext);
}

void BM_GapReachability(benchmark::State& state) {
  const auto inst = path_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        run_engine(EngineKind::Reachability, Problem::Ext, inst.theory, std::nullopt).answer);
  }
}
BENCHMARK(BM_GapReachability)->RangeMultiplier(4)->Range(4, 1024);

void BM_GapGeneric(benchmark::State& state) {
  const auto inst = path_instance(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        run_engine(EngineKind::Generic, Problem::Ext, inst.theory, std::nullopt).answer);
  }
}
BENCHMARK(BM_GapGeneric)->DenseRange(4, 12, 4);

void BM_ThreeSatImage(benchmark::State& state) {
  CnfFormula phi{3, {{1, 2, 3}, {-1, -2, 3}, {1, -2, -3}, {-1, 2, -3}}};
  phi.clauses.resize(static_cast<std::size_t>(state.range(0)), {1, -2, 3});
  const auto inst = threesat_to_default(phi, ThreeSatMode::Ext);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ext(inst.theory).answer);
  }
}
BENCHMARK(BM_ThreeSatImage)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
