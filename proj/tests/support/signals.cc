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

#include "support/signals.h"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace adjustsat::testing {

namespace {

std::size_t Frames(int rate, double seconds) {
  return static_cast<std::size_t>(std::llround(rate * seconds));
}

}  // namespace

AudioClip Tone(int rate, double seconds, double freq_hz, double dbfs,
               std::size_t channels) {
  const double amp = DbToGain(dbfs);
  std::vector<double> x(Frames(rate, seconds));
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = amp * std::sin(2.0 * std::numbers::pi * freq_hz * static_cast<double>(i) / rate);
  }
  return AudioClip(rate, std::vector<std::vector<double>>(channels, x));
}

AudioClip LeftOnlyTone(int rate, double seconds, double freq_hz, double dbfs) {
  AudioClip mono = Tone(rate, seconds, freq_hz, dbfs, 1);
  const auto left = mono.channel(0);
  return AudioClip(rate, {std::vector<double>(left.begin(), left.end()),
                          std::vector<double>(left.size(), 0.0)});
}

AudioClip Noise(int rate, double seconds, double dbfs, std::size_t channels,
                std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const double amp = DbToGain(dbfs);
  std::vector<std::vector<double>> data(channels,
                                        std::vector<double>(Frames(rate, seconds)));
  for (auto& ch : data) {
    for (double& v : ch) v = amp * dist(rng);
  }
  return AudioClip(rate, std::move(data));
}

AudioClip ModulatedTone(int rate, double seconds, double freq_hz, double dbfs,
                        double mod_hz, double depth_db, std::size_t channels) {
  const double amp = DbToGain(dbfs);
  std::vector<double> x(Frames(rate, seconds));
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double t = static_cast<double>(i) / rate;
    const double env_db =
        -depth_db * 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * mod_hz * t));
    x[i] = amp * DbToGain(env_db) * std::sin(2.0 * std::numbers::pi * freq_hz * t);
  }
  return AudioClip(rate, std::vector<std::vector<double>>(channels, x));
}

AudioClip Mix(const AudioClip& a, const AudioClip& b) {
  std::vector<std::vector<double>> out = a.channels();
  for (std::size_t c = 0; c < out.size(); ++c) {
    const auto src = b.channel(c);
    for (std::size_t i = 0; i < out[c].size(); ++i) out[c][i] += src[i];
  }
  return AudioClip(a.sample_rate(), std::move(out));
}

TempDir::TempDir() {
  std::string pattern =
      (std::filesystem::temp_directory_path() / "adjustsat-test-XXXXXX").string();
  if (!mkdtemp(pattern.data())) throw std::runtime_error("mkdtemp failed");
  path_ = pattern;
}

TempDir::~TempDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

}  // namespace adjustsat::testing
