#include <benchmark/benchmark.h>

#include <random>

#include "redalg/coset.hpp"
#include "redalg/projector.hpp"

namespace {

using namespace redalg;

std::shared_ptr<const Algebra> fresh(Family f, int rank, ModuleKind kind) {
  return Algebra::create(RootSystem::build(f, rank), kind, std::nullopt, {});
}

// Projector components are memoized per algebra, so every iteration builds
// a fresh one.
void BM_ProjectorTerm(benchmark::State& state, Family f, int rank, std::vector<long> lambda) {
  for (auto _ : state) {
    auto alg = fresh(f, rank, ModuleKind::Adjoint);
    const auto& t = projector_term(alg->full(), alg->root_system().from_simple_coords(lambda));
    benchmark::DoNotOptimize(t.value);
  }
}
BENCHMARK_CAPTURE(BM_ProjectorTerm, sl2_3, Family::A, 1, std::vector<long>{3})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ProjectorTerm, gl3_11, Family::A, 2, std::vector<long>{1, 1})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ProjectorTerm, gl3_22, Family::A, 2, std::vector<long>{2, 2})->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ProjectorTerm, sp4_11, Family::C, 2, std::vector<long>{1, 1})->Unit(benchmark::kMillisecond);

// Diamond of generator pairs with warm projector memo.
void BM_Diamond(benchmark::State& state, Family f, int rank, ModuleKind kind, const char* a, const char* b) {
  auto alg = fresh(f, rank, kind);
  auto g = alg->full();
  const CosetElement x = CosetElement::generator(g, a);
  const CosetElement y = CosetElement::generator(g, b);
  benchmark::DoNotOptimize(diamond(x, y));
  for (auto _ : state) benchmark::DoNotOptimize(diamond(x, y));
}
BENCHMARK_CAPTURE(BM_Diamond, sl2_EF, Family::A, 1, ModuleKind::Adjoint, "bE[1]", "bF[1]");
BENCHMARK_CAPTURE(BM_Diamond, gl3_EF, Family::A, 2, ModuleKind::Adjoint, "bE[1,1]", "bF[1,1]");
BENCHMARK_CAPTURE(BM_Diamond, sp4_xd, Family::C, 2, ModuleKind::Weyl, "x[1]", "d[1]");
BENCHMARK_CAPTURE(BM_Diamond, sp4_dx, Family::C, 2, ModuleKind::Weyl, "d[2]", "x[2]");

void BM_DiamondRandom(benchmark::State& state) {
  auto alg = fresh(Family::A, 2, ModuleKind::Adjoint);
  auto g = alg->full();
  const CosetElement x = CosetElement::generator(g, "bE[1,0]") + CosetElement::generator(g, "bH[2]");
  const CosetElement y(CosetElement::generator(g, "bF[0,1]").element() * CosetElement::generator(g, "bF[1,0]").element());
  for (auto _ : state) benchmark::DoNotOptimize(diamond(x, y));
}
BENCHMARK(BM_DiamondRandom);

// Multivariate gcd of products sharing a common factor.
void BM_PolynomialGcd(benchmark::State& state) {
  const int deg = static_cast<int>(state.range(0));
  auto poly = [](const char* s) { return RationalFn::parse(s).num(); };
  Polynomial common = poly("1"), a = poly("h1 + 2*h2 + 1"), b = poly("h1 - h3 + 2");
  for (int i = 0; i < deg; ++i) common *= poly(i % 2 ? "h1 - h2 + 3" : "h1 + h2 - h3 + 1");
  a *= common;
  b *= common;
  for (auto _ : state) benchmark::DoNotOptimize(gcd(a, b));
}
BENCHMARK(BM_PolynomialGcd)->DenseRange(1, 5, 2);

}  // namespace
BENCHMARK_MAIN();
