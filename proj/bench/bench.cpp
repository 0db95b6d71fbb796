// Election kernel, serial against OpenMP, and solve time on growing
// constant-degree instances.

#include <benchmark/benchmark.h>

#include "fpm/crosscheck.hpp"
#include "fpm/generator.hpp"
#include "fpm/instance_io.hpp"
#include "fpm/oracle.hpp"
#include "fpm/solver.hpp"

namespace {

using namespace fpm;

// Dense 6x6 instance: a few thousand matchings, so the all-pairs election
// dominates.
const RankTable& election_table() {
  static const RankTable table = [] {
    const Instance inst = generate_instance({6, 6, 0.8, 3});
    return make_rank_table(inst, enumerate_matchings(inst, 16));
  }();
  return table;
}

void BM_ElectionSerial(benchmark::State& state) {
  const RankTable& t = election_table();
  for (auto _ : state) benchmark::DoNotOptimize(election_flags_serial(t));
  state.counters["matchings"] = t.num_matchings;
}
BENCHMARK(BM_ElectionSerial)->Unit(benchmark::kMillisecond);

void BM_ElectionParallel(benchmark::State& state) {
  const RankTable& t = election_table();
  for (auto _ : state) benchmark::DoNotOptimize(election_flags_parallel(t));
  state.counters["matchings"] = t.num_matchings;
}
BENCHMARK(BM_ElectionParallel)->Unit(benchmark::kMillisecond);

void BM_Solve(benchmark::State& state) {
  const Instance inst = generate_instance(constant_degree_params(static_cast<int>(state.range(0)), 8, 1));
  std::int64_t proposals = 0;
  for (auto _ : state) {
    const SolveReport r = solve(inst);
    proposals = r.proposals;
    benchmark::DoNotOptimize(proposals);
  }
  state.SetComplexityN(inst.num_edges() + inst.num_vertices());
  state.counters["proposals"] = static_cast<double>(proposals);
}
BENCHMARK(BM_Solve)->Arg(10000)->Arg(20000)->Arg(40000)->Arg(80000)->Unit(benchmark::kMillisecond)->Complexity();

void BM_GroundTruth(benchmark::State& state) {
  const Instance inst = parse_instance(read_file(FPM_TEST_DATA "/inst3.txt"));
  OracleOptions opts;
  opts.parallel = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(ground_truth(inst, opts));
}
BENCHMARK(BM_GroundTruth)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
