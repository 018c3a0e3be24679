#include <benchmark/benchmark.h>

#include "qhmt/exactmath/linalg.hpp"
#include "qhmt/intcoint/intcoint.hpp"
#include "qhmt/modtrace/modtrace.hpp"
#include "qhmt/qhspec/document.hpp"
#include "qhmt/quasihopf/axioms.hpp"
#include "qhmt/sympferm/sympferm.hpp"

using namespace qhmt;

namespace {

const sympferm::SFFixture& fixture(int n) {
  static const sympferm::SFFixture f1 = sympferm::build(1, Scalar::zeta(8, 7));
  static const sympferm::SFFixture f2 = sympferm::build(2, Scalar(1));
  return n == 1 ? f1 : f2;
}

void BM_ScalarMul(benchmark::State& state) {
  Scalar a = Scalar::parse("1/2 - 3/7*z8 + z8^3");
  Scalar b = Scalar::parse("-2 + 5/3*z8^2");
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_ScalarMul);

void BM_ScalarInverse(benchmark::State& state) {
  Scalar a = Scalar::parse("1/2 - 3/7*z8 + z8^3");
  for (auto _ : state) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_ScalarInverse);

void BM_Build(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Scalar beta = sympferm::admissible_betas(n)[0];
  for (auto _ : state) benchmark::DoNotOptimize(sympferm::build(n, beta));
}
BENCHMARK(BM_Build)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_Axioms(benchmark::State& state) {
  const auto& fx = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_axioms(*fx.H).all_passed());
}
BENCHMARK(BM_Axioms)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Integrals(benchmark::State& state) {
  const auto& fx = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(integrals(*fx.H, Side::Left));
}
BENCHMARK(BM_Integrals)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Cointegral(benchmark::State& state) {
  const auto& fx = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    CointegralData d = prepare(fx.H);
    benchmark::DoNotOptimize(cointegrals(d, Side::Right));
  }
}
BENCHMARK(BM_Cointegral)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_GramRank(benchmark::State& state) {
  const auto& fx = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gram_rank(fx.H->algebra(), fx.expected.lambda_hat));
}
BENCHMARK(BM_GramRank)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_ReductionSamples(benchmark::State& state) {
  const auto& fx = fixture(2);
  CointegralData d = prepare(fx.H);
  ModifiedTrace tr = from_symmetrised_cointegral(d, fx.expected.lambda_hat, Side::Right);
  ReductionOptions opt;
  opt.exhaustive_limit = 0;
  opt.budget = static_cast<std::size_t>(state.range(0));
  opt.only = Side::Right;
  for (auto _ : state) benchmark::DoNotOptimize(verify_reduction(d, tr, opt).passed());
}
BENCHMARK(BM_ReductionSamples)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_SpecRoundTrip(benchmark::State& state) {
  const std::string text = qhspec::serialize(qhspec::from_fixture(fixture(2)));
  for (auto _ : state) benchmark::DoNotOptimize(qhspec::serialize(qhspec::parse(text)));
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * text.size()));
}
BENCHMARK(BM_SpecRoundTrip)->Unit(benchmark::kMillisecond);

void BM_Nullspace(benchmark::State& state) {
  const auto& fx = fixture(2);
  SparseMatrix m = fx.H->algebra().left_multiplication(fx.named.x_plus);
  for (auto _ : state) benchmark::DoNotOptimize(nullspace(m));
}
BENCHMARK(BM_Nullspace)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
