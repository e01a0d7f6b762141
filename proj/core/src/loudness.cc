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

#include "adjustsat/loudness.h"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "adjustsat/error.h"
#include "adjustsat/k_weighting.h"

namespace adjustsat::loudness {

namespace {

constexpr double kLoudnessOffset = -0.691;
constexpr std::array<double, kMaxWeightedChannels> kChannelWeights = {
    1.0, 1.0, 1.0, 1.41, 1.41};

double PowerToLufs(double power) {
  return kLoudnessOffset + 10.0 * std::log10(power);
}

}  // namespace

double ChannelWeight(std::size_t index) { return kChannelWeights.at(index); }

BlockGeometry BlockGeometryFor(int sample_rate) {
  const auto step =
      static_cast<std::size_t>(std::lround(kStepSeconds * sample_rate));
  return BlockGeometry{step, 4 * step};
}

LoudnessReading IntegratedLoudness(const AudioClip& clip) {
  if (clip.num_channels() > kMaxWeightedChannels) {
    throw Error(ErrorCode::kUnsupportedLayout,
                std::to_string(clip.num_channels()) +
                    " channels exceed the weighted set of 5");
  }
  const BlockGeometry geometry = BlockGeometryFor(clip.sample_rate());
  if (clip.num_frames() < geometry.block) {
    throw Error(ErrorCode::kTooShort,
                "clip of " + std::to_string(clip.num_frames()) +
                    " frames is shorter than one 400 ms block");
  }

  // Weighted energy per 100 ms step; a block is the sum of four steps.
  const std::size_t num_steps = clip.num_frames() / geometry.step;
  const std::size_t num_blocks = (clip.num_frames() - geometry.block) /
                                     geometry.step + 1;
  const KWeightingCoefficients k = DesignKWeighting(clip.sample_rate());

  std::vector<std::vector<double>> step_energy(
      clip.num_channels(), std::vector<double>(num_steps, 0.0));
  for (std::size_t c = 0; c < clip.num_channels(); ++c) {
    const std::vector<double> filtered = ApplyKWeighting(k, clip.channel(c));
    for (std::size_t s = 0; s < num_steps; ++s) {
      double acc = 0.0;
      const std::size_t begin = s * geometry.step;
      for (std::size_t i = begin; i < begin + geometry.step; ++i) {
        acc += filtered[i] * filtered[i];
      }
      step_energy[c][s] = acc;
    }
  }

  // Per-block, per-channel mean square z_ij and the weighted block power.
  std::vector<std::vector<double>> block_ms(
      num_blocks, std::vector<double>(clip.num_channels(), 0.0));
  std::vector<double> block_power(num_blocks, 0.0);
  for (std::size_t j = 0; j < num_blocks; ++j) {
    for (std::size_t c = 0; c < clip.num_channels(); ++c) {
      const double energy = step_energy[c][j] + step_energy[c][j + 1] +
                            step_energy[c][j + 2] + step_energy[c][j + 3];
      block_ms[j][c] = energy / static_cast<double>(geometry.block);
      block_power[j] += kChannelWeights[c] * block_ms[j][c];
    }
  }

  auto gated_loudness = [&](auto&& passes) -> std::optional<double> {
    std::vector<double> mean(clip.num_channels(), 0.0);
    std::size_t count = 0;
    for (std::size_t j = 0; j < num_blocks; ++j) {
      if (!passes(j)) continue;
      ++count;
      for (std::size_t c = 0; c < clip.num_channels(); ++c) {
        mean[c] += block_ms[j][c];
      }
    }
    if (count == 0) return std::nullopt;
    double power = 0.0;
    for (std::size_t c = 0; c < clip.num_channels(); ++c) {
      power += kChannelWeights[c] * mean[c] / static_cast<double>(count);
    }
    return PowerToLufs(power);
  };

  auto above_absolute = [&](std::size_t j) {
    return block_power[j] > 0.0 &&
           PowerToLufs(block_power[j]) > kAbsoluteGateLufs;
  };
  const std::optional<double> ungated = gated_loudness(above_absolute);
  if (!ungated) return LoudnessReading{std::nullopt, 0};

  const double relative_gate = *ungated + kRelativeGateLu;
  auto above_both = [&](std::size_t j) {
    return above_absolute(j) && PowerToLufs(block_power[j]) > relative_gate;
  };
  std::size_t count = 0;
  for (std::size_t j = 0; j < num_blocks; ++j) count += above_both(j) ? 1 : 0;
  return LoudnessReading{gated_loudness(above_both), count};
}

double GainToTarget(const LoudnessReading& reading, double target_lufs) {
  if (reading.below_gate()) {
    throw Error(ErrorCode::kUnmeasurable,
                "reading is below gate; no gain reaches the target");
  }
  return target_lufs - *reading.lufs;
}

AudioClip ApplyGain(const AudioClip& clip, double gain_db) {
  if (!std::isfinite(gain_db)) {
    throw Error(ErrorCode::kInvalidArgument, "gain must be finite");
  }
  if (gain_db == 0.0) return clip;
  const double g = DbToGain(gain_db);
  std::vector<AudioClip::Channel> channels = clip.channels();
  for (AudioClip::Channel& ch : channels) {
    for (double& s : ch) s *= g;
  }
  return AudioClip(clip.sample_rate(), std::move(channels));
}

}  // namespace adjustsat::loudness
