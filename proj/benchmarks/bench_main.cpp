// Copyright 2026 The primecert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "primecert/analytic.hpp"
#include "primecert/certifier.hpp"
#include "primecert/published.hpp"
#include "primecert/smoothing.hpp"

namespace pc = primecert;

static void BM_CertifyRow(benchmark::State& state) {
  const auto& row = pc::published_pairs()[static_cast<std::size_t>(state.range(0))];
  pc::CertifierOptions o;
  o.precision_bits = static_cast<int>(state.range(1));
  pc::Certifier certifier(pc::default_constants(), o);
  certifier.certify(row.x0, row.params);
  for (auto _ : state) benchmark::DoNotOptimize(certifier.certify(row.x0, row.params));
}
BENCHMARK(BM_CertifyRow)->Args({2, 256})->Args({2, 512})->Args({11, 256})->Unit(benchmark::kMicrosecond);

static void BM_Norm2Exact(benchmark::State& state) {
  pc::WeightSpec w(2, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(pc::norm2_squared_exact(w));
}
BENCHMARK(BM_Norm2Exact)->Arg(55)->Arg(1171)->Unit(benchmark::kMillisecond);

static void BM_Nu(benchmark::State& state) {
  pc::PrecisionScope scope(256);
  pc::WeightSpec w(2, static_cast<int>(state.range(0)));
  pc::Interval a = pc::Interval::from_decimal("3.08515e-4");
  for (auto _ : state) benchmark::DoNotOptimize(pc::nu(w, a));
}
BENCHMARK(BM_Nu)->Arg(55)->Arg(1171)->Unit(benchmark::kMicrosecond);

static void BM_S4Enclosure(benchmark::State& state) {
  pc::PrecisionScope scope(256);
  auto c = pc::default_constants();
  pc::ConstantValues cv(c);
  auto d = pc::density_for(c, "0.7804");
  for (auto _ : state) benchmark::DoNotOptimize(pc::s4(static_cast<int>(state.range(0)), d, cv));
}
BENCHMARK(BM_S4Enclosure)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
