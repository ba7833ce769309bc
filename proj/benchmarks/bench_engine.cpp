#include "homleib/engine.hpp"

#include <benchmark/benchmark.h>

using namespace homleib;

namespace {
const std::string kCorpus = std::string(HOMLEIB_SOURCE_DIR) + "/corpus";
}

static void BracketIdentityDim6(benchmark::State& state) {
  const auto p = load_presentation_file(kCorpus + "/omni-gl2-id/omni.alg");
  EvalContext ctx = EvalContext::variety(p);
  const Identity& id = Catalog::active().get("dendr_1");
  for (auto _ : state) {
    CheckReport rep = check_identity(id, ctx, static_cast<unsigned>(state.range(0)));
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BracketIdentityDim6)->Arg(1)->Arg(2);

static void SymbolicVarietyCheck(benchmark::State& state) {
  const auto p = load_presentation_file(kCorpus + "/homdendr-3dim-p/dendr3.alg");
  for (auto _ : state) {
    SuiteReport rep = check_variety(p);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(SymbolicVarietyCheck);

static void ExactSolveDim6(benchmark::State& state) {
  const auto p = load_presentation_file(kCorpus + "/omni-gl2-id/omni.alg");
  const LinearMap m = p.twist("al") + LinearMap::identity(p.field, p.dim);
  Vector b(p.field, p.dim);
  for (std::size_t i = 0; i < p.dim; ++i) b[i] = Scalar::from_int(p.field, (int)i - 2);
  for (auto _ : state) {
    Vector x = solve_linear(m, b);
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(ExactSolveDim6);
