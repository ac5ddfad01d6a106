/*
   Copyright 2026 The idealcount Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <benchmark/benchmark.h>

#include <string>

#include "idealcount/constants.hpp"
#include "idealcount/field.hpp"
#include "idealcount/ideal_counter.hpp"
#include "idealcount/quadrature.hpp"
#include "idealcount/verifier.hpp"

namespace {

using namespace idealcount;

FieldSpec bundled(const std::string& name) { return load_field(std::string(IDEALCOUNT_DATA_DIR) + "/fields/" + name); }

void BM_SieveQuadratic(benchmark::State& state) {
  const FieldSpec f = bundled("gaussian.json");
  SieveOptions opt;
  opt.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(tau_sieve(f, state.range(0), opt));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SieveQuadratic)->Arg(100'000)->Arg(1'000'000)->Arg(10'000'000)->Unit(benchmark::kMillisecond);

void BM_SieveCubic(benchmark::State& state) {
  const FieldSpec f = bundled("cubic23.json");
  SieveOptions opt;
  opt.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(tau_sieve(f, state.range(0), opt));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SieveCubic)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

void BM_DedekindFactor(benchmark::State& state) {
  const DedekindContext ctx({-1, -1, 0, 1}, -23);
  std::uint64_t p = 1'000'003;
  for (auto _ : state) benchmark::DoNotOptimize(ctx.residue_degrees(p));
}
BENCHMARK(BM_DedekindFactor);

void BM_UpsilonIntegral(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(upsilon_integral(0.45));
}
BENCHMARK(BM_UpsilonIntegral)->Unit(benchmark::kMicrosecond);

void BM_Satz204Probe(benchmark::State& state) {
  const double U = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(satz204_probe(U, 0.0));
}
BENCHMARK(BM_Satz204Probe)->Arg(1)->Arg(100)->Arg(1000)->Unit(benchmark::kMicrosecond);

void BM_ConstantsRowsUncached(benchmark::State& state) {
  for (auto _ : state)
    for (int n = 2; n <= 100; ++n) {
      benchmark::DoNotOptimize(lambda_K(n));
      benchmark::DoNotOptimize(q8_upper(n));
    }
}
BENCHMARK(BM_ConstantsRowsUncached)->Unit(benchmark::kMicrosecond);

void BM_ReproduceTables(benchmark::State& state) {
  for (auto _ : state)
    for (TableId id : {TableId::T1, TableId::T2, TableId::T3, TableId::T4, TableId::T5})
      benchmark::DoNotOptimize(reproduce_table(id));
}
BENCHMARK(BM_ReproduceTables)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
