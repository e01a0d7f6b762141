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

#ifndef ADJUSTSAT_WAV_H_
#define ADJUSTSAT_WAV_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "adjustsat/audio_clip.h"

namespace adjustsat {

enum class SampleFormat { kPcm16, kPcm24, kFloat32 };

std::string_view SampleFormatName(SampleFormat format);

struct WavInfo {
  SampleFormat format = SampleFormat::kPcm24;
  int sample_rate = 0;
  int num_channels = 0;
  std::size_t num_frames = 0;
};

struct WavFile {
  WavInfo info;
  AudioClip clip;
};

// Decodes a RIFF/WAVE byte image. Integer PCM is scaled by 1 / 2^(bits-1).
// Accepts PCM 16/24-bit and 32-bit float (plain or WAVE_FORMAT_EXTENSIBLE),
// one or two channels.
WavFile DecodeWav(std::span<const std::uint8_t> bytes);
WavFile ReadWav(const std::filesystem::path& path);

// Integer formats are rounded to nearest and saturated at the format limits.
std::vector<std::uint8_t> EncodeWav(const AudioClip& clip,
                                    SampleFormat format = SampleFormat::kPcm24);
void WriteWav(const std::filesystem::path& path, const AudioClip& clip,
              SampleFormat format = SampleFormat::kPcm24);

}  // namespace adjustsat

#endif  // ADJUSTSAT_WAV_H_
