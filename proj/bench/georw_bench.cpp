#include <benchmark/benchmark.h>

#include <random>

#include "georw/builders.hpp"
#include "georw/completion.hpp"
#include "georw/confluence.hpp"
#include "georw/finite_group.hpp"
#include "georw/reduction.hpp"
#include "georw/system_io.hpp"

using namespace georw;

namespace {

  std::string fixture(std::string const& name) {
    return std::string(GEORW_FIXTURES) + "/" + name;
  }

  RewriteSystem amalgam_system() {
    AmalgamData d;
    d.a      = load_group(fixture("z4.group"));
    d.b      = load_group(fixture("z6.group"));
    d.h_in_a = load_embedding(fixture("h_in_z4.embed"), d.a);
    d.h_in_b = load_embedding(fixture("h_in_z6.embed"), d.b);
    return universal_system(build_amalgam_pregroup(d));
  }

  RewriteSystem hnn_system() {
    HnnData d;
    d.g   = load_group(fixture("s3.group"));
    d.a   = load_embedding(fixture("s12_in_s3.embed"), d.g);
    d.b   = load_embedding(fixture("s12_in_s3.embed"), d.g);
    d.phi = load_map(fixture("phi_id.map"), d.a.sub, d.b.sub);
    return universal_system(build_hnn_pregroup(d));
  }

  void BM_check_gp_parallel_amalgam(benchmark::State& state) {
    auto sys = amalgam_system();
    for (auto _ : state) {
      benchmark::DoNotOptimize(check_geodesically_perfect(sys).holds);
    }
  }

  void BM_check_gp_serial_amalgam(benchmark::State& state) {
    auto sys = amalgam_system();
    for (auto _ : state) {
      benchmark::DoNotOptimize(check_geodesically_perfect_serial(sys).holds);
    }
  }

  void BM_check_gp_parallel_hnn(benchmark::State& state) {
    auto sys = hnn_system();
    for (auto _ : state) {
      benchmark::DoNotOptimize(check_geodesically_perfect(sys).holds);
    }
  }

  void BM_check_gp_serial_hnn(benchmark::State& state) {
    auto sys = hnn_system();
    for (auto _ : state) {
      benchmark::DoNotOptimize(check_geodesically_perfect_serial(sys).holds);
    }
  }

  void BM_complete(benchmark::State& state, bool parallel) {
    auto              sys = load_system(fixture("z2_graph.rws"));
    CompletionOptions opts;
    opts.max_phases = 5;
    opts.parallel   = parallel;
    for (auto _ : state) {
      benchmark::DoNotOptimize(kb_complete(sys, opts).system.size());
    }
  }

  void BM_reduce_lr(benchmark::State& state) {
    auto            sys = load_system(fixture("free_group.rws"));
    std::mt19937_64 rng(1);
    Word            w(static_cast<std::size_t>(state.range(0)));
    for (auto& s : w) {
      s = Symbol{static_cast<std::uint32_t>(rng() % 4)};
    }
    for (auto _ : state) {
      benchmark::DoNotOptimize(reduce_lr(w, sys).size());
    }
    state.SetComplexityN(state.range(0));
  }

}  // namespace

BENCHMARK(BM_check_gp_parallel_amalgam)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_check_gp_serial_amalgam)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_check_gp_parallel_hnn)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_check_gp_serial_hnn)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK_CAPTURE(BM_complete, parallel, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_complete, serial, false)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_reduce_lr)->RangeMultiplier(4)->Range(1 << 12, 1 << 22)->Complexity(benchmark::oN);

BENCHMARK_MAIN();
