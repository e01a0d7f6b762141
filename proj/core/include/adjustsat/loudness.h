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

#ifndef ADJUSTSAT_LOUDNESS_H_
#define ADJUSTSAT_LOUDNESS_H_

#include <cstddef>
#include <optional>

#include "adjustsat/audio_clip.h"

namespace adjustsat::loudness {

inline constexpr double kAbsoluteGateLufs = -70.0;
inline constexpr double kRelativeGateLu = -10.0;
inline constexpr double kBlockSeconds = 0.4;
inline constexpr double kStepSeconds = 0.1;
inline constexpr double kDefaultTargetLufs = -23.0;
inline constexpr std::size_t kMaxWeightedChannels = 5;

// Gated integrated loudness. `lufs` is empty (below gate) exactly when no
// block survived gating.
struct LoudnessReading {
  std::optional<double> lufs;
  std::size_t gated_block_count = 0;

  bool below_gate() const noexcept { return !lufs.has_value(); }

  friend bool operator==(const LoudnessReading&,
                         const LoudnessReading&) = default;
};

// Channel weight for the channel at `index` (L, R, C, Ls, Rs order).
double ChannelWeight(std::size_t index);

// Block geometry in samples for a sample rate.
struct BlockGeometry {
  std::size_t step = 0;
  std::size_t block = 0;
};
BlockGeometry BlockGeometryFor(int sample_rate);

// Integrated loudness with K-weighting, 400 ms blocks at 100 ms stride, the
// -70 LUFS absolute gate and the -10 LU relative gate. The final partial
// block is discarded.
//
// Throws kTooShort for clips shorter than one block and kUnsupportedLayout
// for more than five channels.
LoudnessReading IntegratedLoudness(const AudioClip& clip);

// Gain in dB that moves `reading` onto `target_lufs`. Throws kUnmeasurable
// when the reading is below gate.
double GainToTarget(const LoudnessReading& reading, double target_lufs);

// Scales every sample by 10^(gain_db/20). Never clips. Throws
// kInvalidArgument for a non-finite gain.
AudioClip ApplyGain(const AudioClip& clip, double gain_db);

}  // namespace adjustsat::loudness

#endif  // ADJUSTSAT_LOUDNESS_H_
