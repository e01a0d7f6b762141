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

#include <cmath>
#include <numbers>
#include <random>

#include <benchmark/benchmark.h>

#include "adjustsat/audio_clip.h"
#include "adjustsat/loudness.h"

namespace adjustsat {
namespace {

AudioClip NoiseClip(int rate, double seconds, std::size_t channels) {
  std::mt19937 rng(1);
  std::uniform_real_distribution<double> u(-0.1, 0.1);
  const auto frames = static_cast<std::size_t>(rate * seconds);
  std::vector<AudioClip::Channel> data(channels, AudioClip::Channel(frames));
  for (auto& ch : data) {
    for (double& x : ch) x = u(rng);
  }
  return AudioClip(rate, std::move(data));
}

// Seconds of stereo audio per iteration given by the range argument.
void BM_IntegratedLoudness48k(benchmark::State& state) {
  const AudioClip clip = NoiseClip(48000, static_cast<double>(state.range(0)), 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(loudness::IntegratedLoudness(clip));
  }
  state.SetItemsProcessed(state.iterations() * clip.num_frames());
}
BENCHMARK(BM_IntegratedLoudness48k)->Arg(1)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_IntegratedLoudness16kMono(benchmark::State& state) {
  const AudioClip clip = NoiseClip(16000, 30.0, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(loudness::IntegratedLoudness(clip));
  }
  state.SetItemsProcessed(state.iterations() * clip.num_frames());
}
BENCHMARK(BM_IntegratedLoudness16kMono)->Unit(benchmark::kMillisecond);

void BM_ApplyGain(benchmark::State& state) {
  const AudioClip clip = NoiseClip(48000, 30.0, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(loudness::ApplyGain(clip, -3.5));
  }
}
BENCHMARK(BM_ApplyGain)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace adjustsat
