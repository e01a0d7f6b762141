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

#include "adjustsat/audio_clip.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "adjustsat/error.h"

namespace adjustsat {

std::string_view ChannelLayoutName(ChannelLayout layout) {
  switch (layout) {
    case ChannelLayout::kMono: return "mono";
    case ChannelLayout::kStereo: return "stereo";
    case ChannelLayout::kSurround50: return "5.0";
    case ChannelLayout::kOther: return "other";
  }
  return "other";
}

double DbToGain(double db) { return std::pow(10.0, db / 20.0); }

AudioClip::AudioClip(int sample_rate, std::vector<Channel> channels)
    : sample_rate_(sample_rate), channels_(std::move(channels)) {
  if (sample_rate_ < kMinSampleRate) {
    throw Error(ErrorCode::kInvalidClip,
                "sample rate " + std::to_string(sample_rate_) +
                    " Hz is below 8000 Hz");
  }
  if (channels_.empty()) {
    throw Error(ErrorCode::kInvalidClip, "clip has no channels");
  }
  const std::size_t frames = channels_.front().size();
  for (const Channel& ch : channels_) {
    if (ch.size() != frames) {
      throw Error(ErrorCode::kInvalidClip, "channels differ in length");
    }
    if (!std::all_of(ch.begin(), ch.end(),
                     [](double s) { return std::isfinite(s); })) {
      throw Error(ErrorCode::kInvalidClip, "clip contains non-finite samples");
    }
  }
}

AudioClip AudioClip::Silence(int sample_rate, std::size_t num_channels,
                             std::size_t num_frames) {
  return AudioClip(sample_rate,
                   std::vector<Channel>(num_channels, Channel(num_frames, 0.0)));
}

ChannelLayout AudioClip::layout() const noexcept {
  switch (channels_.size()) {
    case 1: return ChannelLayout::kMono;
    case 2: return ChannelLayout::kStereo;
    case 5: return ChannelLayout::kSurround50;
    default: return ChannelLayout::kOther;
  }
}

double AudioClip::Peak() const noexcept {
  double peak = 0.0;
  for (const Channel& ch : channels_) {
    for (double s : ch) peak = std::max(peak, std::fabs(s));
  }
  return peak;
}

AudioClip AudioClip::PaddedTo(std::size_t num_frames) const {
  if (num_frames <= this->num_frames()) return *this;
  std::vector<Channel> padded = channels_;
  for (Channel& ch : padded) ch.resize(num_frames, 0.0);
  return AudioClip(sample_rate_, std::move(padded));
}

}  // namespace adjustsat
