// Copyright 2026 The ottk Authors. All Rights Reserved.
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

// Serial reference kernels against their OpenMP versions.
//   ./bench_kernels --benchmark_filter=Radon

#include <benchmark/benchmark.h>

#include "ottk/kernels.hpp"
#include "ottk/ot_exact.hpp"
#include "ottk/radon.hpp"
#include "ottk/synth.hpp"

namespace {

using namespace ottk;

template <Sinogram (*F)(const Image2D&, std::size_t, std::size_t)>
void BM_RadonForward(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Image2D img = synth::smooth_phantom(n, n, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(F(img, n + 1, 180));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n * n * 180));
}

template <Image2D (*F)(const Sinogram&, std::size_t, std::size_t)>
void BM_Backproject(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Sinogram filtered =
      ramp_filter(radon_forward(synth::smooth_phantom(n, n, 1.0), n + 1, 180), FbpWindow::kRamLak);
  for (auto _ : state) benchmark::DoNotOptimize(F(filtered, n, n));
}

template <std::vector<double> (*F)(const DiscreteMeasure&, const DiscreteMeasure&, std::span<const double>)>
void BM_SlicedW2(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const DiscreteMeasure mu = synth::random_cloud(n, 0.8, 1), nu = synth::random_cloud(n + 3, 0.8, 2);
  const auto th = angle_grid(180);
  for (auto _ : state) benchmark::DoNotOptimize(F(mu, nu, th));
}

template <std::vector<QuantileRep> (*F)(const Sinogram&, std::size_t)>
void BM_ColumnCdt(benchmark::State& state) {
  const auto m = static_cast<std::size_t>(state.range(0));
  const Sinogram s = radon_forward(synth::smooth_phantom(128, 128, 1.0), 129, 180);
  for (auto _ : state) benchmark::DoNotOptimize(F(s, m));
}

BENCHMARK(BM_RadonForward<kernels::radon_forward_serial>)->Name("RadonForward/serial")->Arg(64)->Arg(128);
BENCHMARK(BM_RadonForward<kernels::radon_forward_parallel>)->Name("RadonForward/omp")->Arg(64)->Arg(128);
BENCHMARK(BM_Backproject<kernels::backproject_serial>)->Name("Backproject/serial")->Arg(64)->Arg(128);
BENCHMARK(BM_Backproject<kernels::backproject_parallel>)->Name("Backproject/omp")->Arg(64)->Arg(128);
BENCHMARK(BM_SlicedW2<kernels::sliced_w2_squared_serial>)->Name("SlicedW2/serial")->Arg(50)->Arg(400);
BENCHMARK(BM_SlicedW2<kernels::sliced_w2_squared_parallel>)->Name("SlicedW2/omp")->Arg(50)->Arg(400);
BENCHMARK(BM_ColumnCdt<kernels::column_cdt_serial>)->Name("ColumnCdt/serial")->Arg(256)->Arg(1024);
BENCHMARK(BM_ColumnCdt<kernels::column_cdt_parallel>)->Name("ColumnCdt/omp")->Arg(256)->Arg(1024);

}  // namespace

BENCHMARK_MAIN();
