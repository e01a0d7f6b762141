// Copyright 2026 The AdjustSat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <atomic>
#include <random>

#include <benchmark/benchmark.h>

#include "adjustsat/ld_grid.h"
#include "adjustsat/stimulus.h"

namespace adjustsat {
namespace {

stimulus::StemPair Stems(double seconds) {
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> u(-0.1, 0.1);
  const auto frames = static_cast<std::size_t>(48000 * seconds);
  auto make = [&](double scale) {
    std::vector<AudioClip::Channel> data(2, AudioClip::Channel(frames));
    for (auto& ch : data) {
      for (double& x : ch) x = scale * u(rng);
    }
    return AudioClip(48000, std::move(data));
  };
  return stimulus::MakeStemPair(make(1.0), make(0.3));
}

void BM_RenderVersion(benchmark::State& state) {
  const stimulus::StemPair stems = Stems(30.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stimulus::RenderVersion(stems, -6.0, -23.0));
  }
}
BENCHMARK(BM_RenderVersion)->Unit(benchmark::kMillisecond);

// One full WDR grid (41 versions) of a 30 s stereo item.
void BM_RenderWdrGrid(benchmark::State& state) {
  const stimulus::StemPair stems = Stems(30.0);
  stimulus::ItemSpec item;
  item.id = "bench";
  item.grid = stimulus::ParseGrid("+12:1:-15;-16:2:-40");
  stimulus::RenderOptions options;
  options.threads = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    std::atomic<std::size_t> n{0};
    stimulus::RenderVersions(
        item, 10.0, stems, [&](stimulus::RenderedVersion&&) { ++n; }, options);
    benchmark::DoNotOptimize(n.load());
  }
}
BENCHMARK(BM_RenderWdrGrid)->Arg(1)->Arg(0)->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_SimulateDs(benchmark::State& state) {
  const stimulus::StemPair stems = Stems(30.0);
  const auto model = stimulus::LeakageModel::Of(-20.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stimulus::SimulateDs(stems, model));
  }
}
BENCHMARK(BM_SimulateDs)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace adjustsat
