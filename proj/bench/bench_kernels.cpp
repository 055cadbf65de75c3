#include <benchmark/benchmark.h>

#include "linsets/evensets.hpp"
#include "linsets/families.hpp"
#include "linsets/verify.hpp"

using namespace linsets;

namespace {

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::parallel : Exec::serial; }

void BM_PointWeights(benchmark::State& st) {
  const FieldTower T = FieldTower::make(3, 1, 3);
  const LinearSet L = parse_family(T, "xq-trace").linear_set();
  for (auto _ : st) benchmark::DoNotOptimize(point_weights(L, exec_of(st)));
  st.SetLabel(st.range(0) ? "parallel" : "serial");
}

void BM_LineIntersections(benchmark::State& st) {
  const FieldTower T = FieldTower::make(2, 6, 1);
  const GaloisField& F = T.field(Level::q);
  std::vector<bool> member(plane_size(64));
  Sampler rnd(1);
  for (std::size_t i = 0; i < member.size(); ++i) member[i] = rnd.below(2);
  for (auto _ : st) benchmark::DoNotOptimize(line_intersections(F, member, exec_of(st)));
  st.SetLabel(st.range(0) ? "parallel" : "serial");
}

void BM_VerifyFamily(benchmark::State& st) {
  const FieldTower T = FieldTower::make(2, 1, 5);
  const Family fam = parse_family(T, "lp:s=1");
  for (auto _ : st) benchmark::DoNotOptimize(verify_family(fam, exec_of(st)));
  st.SetLabel(st.range(0) ? "parallel" : "serial");
}

}  // namespace

BENCHMARK(BM_PointWeights)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LineIntersections)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyFamily)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
