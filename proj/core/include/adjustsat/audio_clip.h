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

#ifndef ADJUSTSAT_AUDIO_CLIP_H_
#define ADJUSTSAT_AUDIO_CLIP_H_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace adjustsat {

inline constexpr int kMinSampleRate = 8000;

enum class ChannelLayout { kMono, kStereo, kSurround50, kOther };

std::string_view ChannelLayoutName(ChannelLayout layout);

// Converts a level change in dB to a linear amplitude factor.
double DbToGain(double db);

// Multichannel block of real-valued PCM samples, nominal full scale +/-1.0.
// Immutable once constructed; the constructor enforces that every channel has
// the same length, every sample is finite and the rate is at least 8 kHz.
class AudioClip {
 public:
  using Channel = std::vector<double>;

  AudioClip(int sample_rate, std::vector<Channel> channels);

  // A silent clip with the given geometry.
  static AudioClip Silence(int sample_rate, std::size_t num_channels,
                           std::size_t num_frames);

  int sample_rate() const noexcept { return sample_rate_; }
  std::size_t num_channels() const noexcept { return channels_.size(); }
  std::size_t num_frames() const noexcept {
    return channels_.empty() ? 0 : channels_.front().size();
  }
  double duration_seconds() const noexcept {
    return static_cast<double>(num_frames()) / sample_rate_;
  }
  ChannelLayout layout() const noexcept;

  std::span<const double> channel(std::size_t index) const {
    return channels_.at(index);
  }
  const std::vector<Channel>& channels() const noexcept { return channels_; }

  // Largest absolute sample value over all channels.
  double Peak() const noexcept;

  // Returns a copy with every channel zero-padded at the tail to num_frames.
  // Clips that are already at least that long are returned unchanged.
  AudioClip PaddedTo(std::size_t num_frames) const;

  friend bool operator==(const AudioClip&, const AudioClip&) = default;

 private:
  int sample_rate_;
  std::vector<Channel> channels_;
};

}  // namespace adjustsat

#endif  // ADJUSTSAT_AUDIO_CLIP_H_
