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

#include "adjustsat/wav.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <optional>
#include <string>

#include "adjustsat/error.h"

namespace adjustsat {

namespace {

constexpr std::uint16_t kFormatPcm = 0x0001;
constexpr std::uint16_t kFormatFloat = 0x0003;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  bool Has(std::size_t n) const { return pos_ + n <= bytes_.size(); }
  std::size_t pos() const { return pos_; }
  void Seek(std::size_t pos) { pos_ = pos; }

  std::uint16_t U16() {
    Require(2);
    std::uint16_t v = bytes_[pos_] | (bytes_[pos_ + 1] << 8);
    pos_ += 2;
    return v;
  }
  std::uint32_t U32() {
    Require(4);
    std::uint32_t v = 0;
    for (int i = 3; i >= 0; --i) v = (v << 8) | bytes_[pos_ + i];
    pos_ += 4;
    return v;
  }
  std::string_view Tag() {
    Require(4);
    std::string_view tag(reinterpret_cast<const char*>(&bytes_[pos_]), 4);
    pos_ += 4;
    return tag;
  }

 private:
  void Require(std::size_t n) const {
    if (!Has(n)) throw Error(ErrorCode::kUnreadableFile, "truncated WAV data");
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

struct FormatChunk {
  std::uint16_t tag = 0;
  std::uint16_t channels = 0;
  std::uint32_t sample_rate = 0;
  std::uint16_t bits = 0;
  std::uint16_t block_align = 0;
};

SampleFormat ResolveFormat(const FormatChunk& fmt) {
  if (fmt.tag == kFormatPcm && fmt.bits == 16) return SampleFormat::kPcm16;
  if (fmt.tag == kFormatPcm && fmt.bits == 24) return SampleFormat::kPcm24;
  if (fmt.tag == kFormatFloat && fmt.bits == 32) return SampleFormat::kFloat32;
  throw Error(ErrorCode::kUnsupportedFormat,
              "format tag " + std::to_string(fmt.tag) + " with " +
                  std::to_string(fmt.bits) + " bits per sample");
}

double DecodeSample(const std::uint8_t* p, SampleFormat format) {
  switch (format) {
    case SampleFormat::kPcm16: {
      auto v = static_cast<std::int16_t>(p[0] | (p[1] << 8));
      return v / 32768.0;
    }
    case SampleFormat::kPcm24: {
      std::int32_t v = p[0] | (p[1] << 8) | (p[2] << 16);
      if (v & 0x800000) v -= 0x1000000;
      return v / 8388608.0;
    }
    case SampleFormat::kFloat32: {
      std::uint32_t bits = p[0] | (p[1] << 8) | (p[2] << 16) |
                           (static_cast<std::uint32_t>(p[3]) << 24);
      return static_cast<double>(std::bit_cast<float>(bits));
    }
  }
  return 0.0;
}

int BytesPerSample(SampleFormat format) {
  switch (format) {
    case SampleFormat::kPcm16: return 2;
    case SampleFormat::kPcm24: return 3;
    case SampleFormat::kFloat32: return 4;
  }
  return 0;
}

void PutU16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(v & 0xFF);
  out.push_back(v >> 8);
}

void PutU32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back((v >> (8 * i)) & 0xFF);
}

void PutTag(std::vector<std::uint8_t>& out, std::string_view tag) {
  out.insert(out.end(), tag.begin(), tag.end());
}

std::int32_t Quantize(double sample, double scale, std::int32_t lo,
                      std::int32_t hi) {
  double v = std::nearbyint(sample * scale);
  return static_cast<std::int32_t>(
      std::clamp(v, static_cast<double>(lo), static_cast<double>(hi)));
}

}  // namespace

std::string_view SampleFormatName(SampleFormat format) {
  switch (format) {
    case SampleFormat::kPcm16: return "pcm16";
    case SampleFormat::kPcm24: return "pcm24";
    case SampleFormat::kFloat32: return "float32";
  }
  return "unknown";
}

WavFile DecodeWav(std::span<const std::uint8_t> bytes) {
  ByteReader in(bytes);
  if (!in.Has(12) || in.Tag() != "RIFF") {
    throw Error(ErrorCode::kUnreadableFile, "missing RIFF header");
  }
  in.U32();  // riff size, not trusted
  if (in.Tag() != "WAVE") {
    throw Error(ErrorCode::kUnreadableFile, "RIFF form is not WAVE");
  }

  std::optional<FormatChunk> fmt;
  std::optional<std::span<const std::uint8_t>> data;
  while (in.Has(8) && !(fmt && data)) {
    const std::string_view tag = in.Tag();
    const std::uint32_t size = in.U32();
    const std::size_t body = in.pos();
    if (tag == "fmt ") {
      FormatChunk f;
      f.tag = in.U16();
      f.channels = in.U16();
      f.sample_rate = in.U32();
      in.U32();  // byte rate
      f.block_align = in.U16();
      f.bits = in.U16();
      if (f.tag == kFormatExtensible && size >= 40) {
        in.U16();  // cbSize
        in.U16();  // valid bits
        in.U32();  // channel mask
        f.tag = in.U16();  // leading bytes of the sub-format GUID
      }
      fmt = f;
    } else if (tag == "data") {
      const std::size_t available = bytes.size() - body;
      data = bytes.subspan(body, std::min<std::size_t>(size, available));
    }
    in.Seek(body + size + (size & 1));
  }
  if (!fmt) throw Error(ErrorCode::kUnreadableFile, "no fmt chunk");
  if (!data) throw Error(ErrorCode::kUnreadableFile, "no data chunk");

  const SampleFormat format = ResolveFormat(*fmt);
  if (fmt->channels < 1 || fmt->channels > 2) {
    throw Error(ErrorCode::kUnsupportedFormat,
                std::to_string(fmt->channels) + " channels (1 or 2 supported)");
  }
  const int width = BytesPerSample(format);
  const std::size_t frame_bytes = static_cast<std::size_t>(width) * fmt->channels;
  const std::size_t frames = data->size() / frame_bytes;

  std::vector<AudioClip::Channel> channels(fmt->channels,
                                           AudioClip::Channel(frames));
  const std::uint8_t* p = data->data();
  for (std::size_t i = 0; i < frames; ++i) {
    for (std::size_t c = 0; c < channels.size(); ++c) {
      channels[c][i] = DecodeSample(p, format);
      p += width;
    }
  }

  WavInfo info{format, static_cast<int>(fmt->sample_rate), fmt->channels,
               frames};
  return WavFile{info, AudioClip(info.sample_rate, std::move(channels))};
}

WavFile ReadWav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kUnreadableFile, "cannot open " + path.string());
  }
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  try {
    return DecodeWav(bytes);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

std::vector<std::uint8_t> EncodeWav(const AudioClip& clip, SampleFormat format) {
  const int width = BytesPerSample(format);
  const auto channels = static_cast<std::uint16_t>(clip.num_channels());
  const std::uint32_t data_size =
      static_cast<std::uint32_t>(clip.num_frames() * channels * width);

  std::vector<std::uint8_t> out;
  out.reserve(44 + data_size);
  PutTag(out, "RIFF");
  PutU32(out, 36 + data_size);
  PutTag(out, "WAVE");
  PutTag(out, "fmt ");
  PutU32(out, 16);
  PutU16(out, format == SampleFormat::kFloat32 ? kFormatFloat : kFormatPcm);
  PutU16(out, channels);
  PutU32(out, static_cast<std::uint32_t>(clip.sample_rate()));
  PutU32(out, static_cast<std::uint32_t>(clip.sample_rate()) * channels * width);
  PutU16(out, static_cast<std::uint16_t>(channels * width));
  PutU16(out, static_cast<std::uint16_t>(8 * width));
  PutTag(out, "data");
  PutU32(out, data_size);

  for (std::size_t i = 0; i < clip.num_frames(); ++i) {
    for (std::size_t c = 0; c < channels; ++c) {
      const double s = clip.channel(c)[i];
      switch (format) {
        case SampleFormat::kPcm16: {
          const std::int32_t v = Quantize(s, 32768.0, -32768, 32767);
          PutU16(out, static_cast<std::uint16_t>(v & 0xFFFF));
          break;
        }
        case SampleFormat::kPcm24: {
          const std::int32_t v = Quantize(s, 8388608.0, -8388608, 8388607);
          out.push_back(v & 0xFF);
          out.push_back((v >> 8) & 0xFF);
          out.push_back((v >> 16) & 0xFF);
          break;
        }
        case SampleFormat::kFloat32:
          PutU32(out, std::bit_cast<std::uint32_t>(static_cast<float>(s)));
          break;
      }
    }
  }
  return out;
}

void WriteWav(const std::filesystem::path& path, const AudioClip& clip,
              SampleFormat format) {
  const std::vector<std::uint8_t> bytes = EncodeWav(clip, format);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIo, "short write to " + path.string());
}

}  // namespace adjustsat
