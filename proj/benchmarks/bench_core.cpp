#include <benchmark/benchmark.h>

#include <random>

#include "numerosity/labellab.hpp"
#include "numerosity/repl.hpp"

using namespace numerosity;

namespace {

Ordinal sample_ordinal(std::mt19937_64& rng, int depth) {
  if (depth == 0) return Ordinal::natural(std::uniform_int_distribution<long>(0, 9)(rng));
  Ordinal out;
  for (int i = 0; i < 3; ++i)
    out = natural_add(out, Ordinal::omega_pow(sample_ordinal(rng, depth - 1), 1 + rng() % 4));
  return out;
}

void BM_NaturalMul(benchmark::State& state) {
  std::mt19937_64 rng(1);
  Ordinal a = sample_ordinal(rng, static_cast<int>(state.range(0)));
  Ordinal b = sample_ordinal(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(natural_mul(a, b));
}
BENCHMARK(BM_NaturalMul)->DenseRange(1, 3);

void BM_NumOfSet(benchmark::State& state) {
  SetExpr s = parse_setexpr("(Q(0,1] | Q(2,7/2]) \\ fin{1/2, 3}");
  for (auto _ : state) benchmark::DoNotOptimize(num(s));
}
BENCHMARK(BM_NumOfSet);

void BM_FieldCompare(benchmark::State& state) {
  NumExpr a = eval_num(parse_numexpr("(alpha^3 + 2*beta) / (alpha - 1)"));
  NumExpr b = eval_num(parse_numexpr("alpha^2*beta / (beta + 1) + w^w"));
  AxiomTable t;
  for (auto _ : state) benchmark::DoNotOptimize(nf_cmp(a, b, t));
}
BENCHMARK(BM_FieldCompare);

void BM_EnumerateCount(benchmark::State& state) {
  SetExpr s = parse_setexpr("mod(3,1) | pow(2)");
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_count(s, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EnumerateCount)->DenseRange(2, 3);

void BM_SurrealMul(benchmark::State& state) {
  SignExpansion x = SignExpansion::finite("+-+-+-+");
  SignExpansion y = SignExpansion::finite("-+-++-+");
  for (auto _ : state) benchmark::DoNotOptimize(s_mul(x, y));
}
BENCHMARK(BM_SurrealMul);

void BM_ValidateBuiltin(benchmark::State& state) {
  PivotalTree t = builtin_universe();
  for (auto _ : state) benchmark::DoNotOptimize(validate_labeltree(t));
}
BENCHMARK(BM_ValidateBuiltin);

void BM_ReplLine(benchmark::State& state) {
  Session s;
  for (auto _ : state) benchmark::DoNotOptimize(eval_line(":cmp num(Q), num(R)", s));
}
BENCHMARK(BM_ReplLine);

}  // namespace

BENCHMARK_MAIN();
