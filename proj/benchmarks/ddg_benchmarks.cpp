#include <benchmark/benchmark.h>

#include "ddg/construct.hpp"
#include "ddg/graph6.hpp"
#include "ddg/rng.hpp"
#include "ddg/symplectic.hpp"
#include "ddg/verify.hpp"

namespace {

using namespace ddg;

const DdgInstance& polarity_instance() {
  static const DdgInstance inst = [] {
    const auto a = symdesign_null_polarity(2, 2);
    const std::vector<ResolvableDesign> designs(15, affine_from_ag(2, 3));
    LabelRequest lr;
    lr.strategy = LabelStrategy::Seeded;
    lr.seed = 1;
    const auto labels = label_assign(a, lr);
    SigmaRequest sr;
    sr.strategy = SigmaStrategy::Seeded;
    sr.seed = 1;
    return construct1(labels, designs, sigma_family_make(labels, designs, sr));
  }();
  return inst;
}

const Graph& symplectic_y(RingKind kind) {
  static const Graph z4 = SymplecticGraph(SymplecticVariant::Y, 2, LocalRing(RingKind::IntegersModPSquared, 2)).graph();
  static const Graph f2x =
      SymplecticGraph(SymplecticVariant::Y, 2, LocalRing(RingKind::PolynomialsModXSquared, 2)).graph();
  return kind == RingKind::IntegersModPSquared ? z4 : f2x;
}

void BM_PairCounts(benchmark::State& state) {
  const auto& g = polarity_instance().graph;
  for (auto _ : state) benchmark::DoNotOptimize(PairCounts(g));
}
BENCHMARK(BM_PairCounts)->Unit(benchmark::kMicrosecond);

void BM_DdgVerify(benchmark::State& state) {
  const auto& inst = polarity_instance();
  for (auto _ : state) benchmark::DoNotOptimize(ddg_verify(inst.graph, inst.partition));
}
BENCHMARK(BM_DdgVerify)->Unit(benchmark::kMicrosecond);

void BM_Construct1(benchmark::State& state) {
  const auto a = symdesign_null_polarity(2, 2);
  const std::vector<ResolvableDesign> designs(15, affine_from_ag(2, 3));
  const auto labels = label_assign(a, {});
  const auto sigma = sigma_family_make(labels, designs, {});
  for (auto _ : state) benchmark::DoNotOptimize(construct1(labels, designs, sigma));
}
BENCHMARK(BM_Construct1)->Unit(benchmark::kMicrosecond);

void BM_PartitionsDiscover(benchmark::State& state) {
  const auto& g = symplectic_y(RingKind::IntegersModPSquared);
  for (auto _ : state) benchmark::DoNotOptimize(partitions_discover(g));
}
BENCHMARK(BM_PartitionsDiscover)->Unit(benchmark::kMillisecond);

void BM_IsoRelabeled(benchmark::State& state) {
  const auto& g = symplectic_y(RingKind::PolynomialsModXSquared);
  Rng rng(7);
  const auto perm = rng.permutation(g.order());
  const auto h = g.permuted(perm);
  for (auto _ : state) benchmark::DoNotOptimize(iso_check(g, h));
}
BENCHMARK(BM_IsoRelabeled)->Unit(benchmark::kMillisecond);

void BM_IsoDistinctRings(benchmark::State& state) {
  const auto& g = symplectic_y(RingKind::IntegersModPSquared);
  const auto& h = symplectic_y(RingKind::PolynomialsModXSquared);
  for (auto _ : state) benchmark::DoNotOptimize(iso_check(g, h));
}
BENCHMARK(BM_IsoDistinctRings)->Unit(benchmark::kMillisecond);

void BM_Graph6RoundTrip(benchmark::State& state) {
  const auto& g = polarity_instance().graph;
  for (auto _ : state) benchmark::DoNotOptimize(graph6_decode(graph6_encode(g)));
}
BENCHMARK(BM_Graph6RoundTrip)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
