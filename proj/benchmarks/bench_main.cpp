#include <benchmark/benchmark.h>

#include "algstat/halting_table.hpp"
#include "algstat/models.hpp"
#include "algstat/omega.hpp"
#include "algstat/set_codec.hpp"

using namespace algstat;

namespace {

MachineConfig config_for(int L) {
  MachineConfig cfg;
  cfg.max_prog_len = L;
  return cfg;
}

const HaltingTable& default_table() {
  static const HaltingTable t = [] {
    const MachineConfig cfg;
    return build_table(cfg, universe_conditions(cfg));
  }();
  return t;
}

}  // namespace

// Every program of length <= 12 on one condition.
void BM_RunAllPrograms(benchmark::State& state) {
  const Bitstring y = Bitstring::parse("0110");
  const auto n = static_cast<ProgramIndex>(program_count(12));
  for (auto _ : state) {
    std::uint64_t halted = 0;
    for (ProgramIndex i = 0; i < n; ++i) halted += run(program_at(i), y, 1024).halted() ? 1 : 0;
    benchmark::DoNotOptimize(halted);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) * n);
}
BENCHMARK(BM_RunAllPrograms)->Unit(benchmark::kMillisecond);

void BM_BuildTable(benchmark::State& state) {
  const MachineConfig cfg = config_for(static_cast<int>(state.range(0)));
  BuildOptions opts;
  opts.workers = static_cast<unsigned>(state.range(1));
  const auto conds = universe_conditions(cfg);
  for (auto _ : state) {
    HaltingTable t = build_table(cfg, conds, opts);
    benchmark::DoNotOptimize(t.program_count());
  }
}
BENCHMARK(BM_BuildTable)->Args({12, 1})->Args({14, 1})->Args({16, 1})->Args({16, 4})->Unit(benchmark::kMillisecond);

void BM_OmegaLedger(benchmark::State& state) {
  const HaltingTable& t = default_table();
  for (auto _ : state) benchmark::DoNotOptimize(omega_ledger(t, 16).omega(16));
}
BENCHMARK(BM_OmegaLedger)->Unit(benchmark::kMillisecond);

void BM_Profile(benchmark::State& state) {
  const HaltingTable& t = default_table();
  const ModelCatalog catalog(t, 16);
  const auto xs = Bitstring::all_up_to(6);
  for (auto _ : state) {
    for (const auto& x : xs) benchmark::DoNotOptimize(profile(catalog, x, 16).frontier().size());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * xs.size()));
}
BENCHMARK(BM_Profile)->Unit(benchmark::kMicrosecond);

void BM_StrongProfile(benchmark::State& state) {
  const HaltingTable& t = default_table();
  const ModelCatalog catalog(t, 16);
  const auto xs = Bitstring::all_of_length(6);
  for (auto _ : state) {
    for (const auto& x : xs) benchmark::DoNotOptimize(strong_profile(t, catalog, x, Complexity(9), 16).empty());
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * xs.size()));
}
BENCHMARK(BM_StrongProfile)->Unit(benchmark::kMicrosecond);

void BM_SetCodec(benchmark::State& state) {
  const auto strings = Bitstring::all_up_to(6);
  for (auto _ : state) {
    const auto code = encode_set(strings);
    benchmark::DoNotOptimize(decode_set(code)->size());
  }
}
BENCHMARK(BM_SetCodec);
BENCHMARK_MAIN();
