#include "homleib/scalar.hpp"

#include <benchmark/benchmark.h>

using namespace homleib;

static void RationalArithmetic(benchmark::State& state) {
  const FieldPtr f = make_field(FieldSpec::rationals());
  Scalar a = scalar_parse("355/113", f);
  Scalar b = scalar_parse("-22/7", f);
  for (auto _ : state) {
    Scalar c = a * b + a / b - b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(RationalArithmetic);

static void PolynomialProducts(benchmark::State& state) {
  const FieldPtr f = make_field(FieldSpec::rational_functions({"p", "q"}));
  const Scalar base = scalar_parse("p^2/2 - 3pq + q^2/3 + 1", f);
  for (auto _ : state) {
    Scalar acc = Scalar::one(f);
    for (int i = 0; i < static_cast<int>(state.range(0)); ++i) acc = acc * base;
    benchmark::DoNotOptimize(acc);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(PolynomialProducts)->RangeMultiplier(2)->Range(2, 16)->Complexity();

static void QuadraticInverse(benchmark::State& state) {
  const FieldPtr f = make_field(FieldSpec::quadratic(2));
  const Scalar x = scalar_parse("3/2 + 5/7s", f);
  for (auto _ : state) {
    Scalar inv = x.inverse();
    benchmark::DoNotOptimize(inv);
  }
}
BENCHMARK(QuadraticInverse);
