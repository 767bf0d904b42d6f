// Copyright 2026 The Poncelet Loci Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Serial reference against the OpenMP kernels. Every benchmark takes the
// execution mode as its first argument (0 serial, 1 OpenMP) and the sample
// count as its second.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <optional>
#include <string>

#include "poncelet/families.hpp"
#include "poncelet/loci.hpp"

namespace {

using namespace poncelet;

const FamilySpec& confocal() {
  static const FamilySpec s = concentric_spec(FamilyKind::Confocal, Ellipse({0, 0}, 1.5, 1.0));
  return s;
}

Exec exec_of(const benchmark::State& st) { return st.range(0) ? Exec::OpenMP : Exec::Serial; }

void finish(benchmark::State& st) {
  st.SetLabel(st.range(0) ? "openmp x" + std::to_string(omp_get_max_threads()) : "serial");
  st.SetItemsProcessed(st.iterations() * st.range(1));
}

void BM_CenterLocus(benchmark::State& st) {
  Channel ch;
  ch.locus_type = LocusType::Xn;
  ch.center = 3;
  for (auto _ : st) {
    benchmark::DoNotOptimize(sample_locus(confocal(), ch, static_cast<int>(st.range(1)), {exec_of(st), std::nullopt}));
  }
  finish(st);
}

void BM_Envelope(benchmark::State& st) {
  Channel ch;
  ch.locus_type = LocusType::E1X;
  ch.center = 1;
  for (auto _ : st) {
    benchmark::DoNotOptimize(envelope(confocal(), ch, static_cast<int>(st.range(1)), {exec_of(st), 1e-4}));
  }
  finish(st);
}

void BM_Invariants(benchmark::State& st) {
  Channel ch;
  ch.locus_type = LocusType::Xn;
  ch.center = 1;
  for (auto _ : st) {
    benchmark::DoNotOptimize(
        detect_invariants(confocal(), ch, static_cast<int>(st.range(1)), kDefaultInvariantTol, exec_of(st)));
  }
  finish(st);
}

void modes(benchmark::internal::Benchmark* b) {
  for (int exec : {0, 1}) {
    for (int n : {720, 5760, 46080}) b->Args({exec, n});
  }
  b->ArgNames({"omp", "n"})->Unit(benchmark::kMillisecond);
}

BENCHMARK(BM_CenterLocus)->Apply(modes);
BENCHMARK(BM_Envelope)->Apply(modes);
BENCHMARK(BM_Invariants)->Apply(modes);

}  // namespace

BENCHMARK_MAIN();
