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

#include "adjustsat/stimulus.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fmt/format.h>
#include <mutex>
#include <thread>

#include "adjustsat/error.h"

namespace adjustsat::stimulus {

namespace {

// a * x + b * y, sample-wise.
AudioClip Combine(double a, const AudioClip& x, double b, const AudioClip& y) {
  std::vector<AudioClip::Channel> out(x.num_channels());
  for (std::size_t c = 0; c < x.num_channels(); ++c) {
    const auto xs = x.channel(c);
    const auto ys = y.channel(c);
    out[c].resize(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      out[c][i] = a * xs[i] + b * ys[i];
    }
  }
  return AudioClip(x.sample_rate(), std::move(out));
}

}  // namespace

std::string_view DeMethodName(DeMethod m) {
  return m == DeMethod::kOo ? "OO" : "DS";
}

std::string_view ProdTypeName(ProdType p) {
  return p == ProdType::kAr ? "AR" : "WDR";
}

std::string_view ContentTagName(ContentTag t) {
  switch (t) {
    case ContentTag::kFemaleVoiceOver: return "fVO";
    case ContentTag::kMaleVoiceOver: return "mVO";
    case ContentTag::kMusic: return "music";
    case ContentTag::kNoise: return "noise";
  }
  return "";
}

DeMethod ParseDeMethod(std::string_view s) {
  if (s == "OO") return DeMethod::kOo;
  if (s == "DS") return DeMethod::kDs;
  throw Error(ErrorCode::kInvalidItem,
              fmt::format("unknown DE method '{}' (OO or DS)", s));
}

ProdType ParseProdType(std::string_view s) {
  if (s == "AR") return ProdType::kAr;
  if (s == "WDR") return ProdType::kWdr;
  throw Error(ErrorCode::kInvalidItem,
              fmt::format("unknown production type '{}' (AR or WDR)", s));
}

ContentTag ParseContentTag(std::string_view s) {
  for (ContentTag t : {ContentTag::kFemaleVoiceOver, ContentTag::kMaleVoiceOver,
                       ContentTag::kMusic, ContentTag::kNoise}) {
    if (ContentTagName(t) == s) return t;
  }
  throw Error(ErrorCode::kInvalidItem, fmt::format("unknown content tag '{}'", s));
}

StemPair MakeStemPair(AudioClip fg, AudioClip bg) {
  if (fg.sample_rate() != bg.sample_rate()) {
    throw Error(ErrorCode::kStemMismatch,
                fmt::format("fg at {} Hz, bg at {} Hz", fg.sample_rate(),
                            bg.sample_rate()));
  }
  if (fg.num_channels() != bg.num_channels()) {
    throw Error(ErrorCode::kStemMismatch,
                fmt::format("fg has {} channels, bg has {}", fg.num_channels(),
                            bg.num_channels()));
  }
  const std::size_t frames = std::max(fg.num_frames(), bg.num_frames());
  return StemPair{fg.PaddedTo(frames), bg.PaddedTo(frames)};
}

LeakageModel LeakageModel::Of(double leakage_db) {
  if (!std::isfinite(leakage_db) || leakage_db > 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                fmt::format("leakage must be a finite value <= 0 dB, got {}",
                            leakage_db));
  }
  return LeakageModel(leakage_db);
}

LeakageModel LeakageModel::FromOptional(std::optional<double> leakage_db) {
  return leakage_db ? Of(*leakage_db) : Disabled();
}

double LeakageModel::gain() const noexcept {
  return leakage_db_ ? DbToGain(*leakage_db_) : 0.0;
}

SeparatedStems SimulateDs(const StemPair& stems, const LeakageModel& model) {
  if (!model.leakage_db()) return SeparatedStems{stems, stems, 0.0};
  const double g = model.gain();
  StemPair estimate{Combine(1.0, stems.fg, g, stems.bg),
                    Combine(1.0, stems.bg, g, stems.fg)};
  return SeparatedStems{std::move(estimate), stems, g};
}

void ValidateItem(const ItemSpec& item) {
  if (item.id.empty()) throw Error(ErrorCode::kInvalidItem, "item id is empty");
  if (item.grid.offsets().empty()) {
    throw Error(ErrorCode::kInvalidItem, "item " + item.id + " has no grid");
  }
  if (item.de_method == DeMethod::kDs && !item.leakage_db) {
    throw Error(ErrorCode::kInvalidItem,
                "DS item " + item.id + " needs a leakage value");
  }
  if (item.de_method == DeMethod::kOo && item.leakage_db) {
    throw Error(ErrorCode::kInvalidItem,
                "OO item " + item.id + " must not carry a leakage value");
  }
  if (item.leakage_db && !(*item.leakage_db <= 0.0)) {
    throw Error(ErrorCode::kInvalidItem,
                "item " + item.id + ": leakage must be <= 0 dB");
  }
}

double ComputeLd(const StemPair& stems) {
  const loudness::LoudnessReading fg = loudness::IntegratedLoudness(stems.fg);
  const loudness::LoudnessReading bg = loudness::IntegratedLoudness(stems.bg);
  if (fg.below_gate() || bg.below_gate()) {
    throw Error(ErrorCode::kUnmeasurableStem,
                fg.below_gate() ? "foreground stem is below gate"
                                : "background stem is below gate");
  }
  return *fg.lufs - *bg.lufs;
}

double ResolveDefaultLd(const ItemSpec& item, const StemPair& ingested) {
  const double measured = ComputeLd(ingested);
  if (!item.default_ld) return measured;
  if (std::fabs(*item.default_ld - measured) > kDefaultLdTolerance) {
    throw Error(ErrorCode::kDefaultLdMismatch,
                fmt::format("item {}: declared default LD {:.2f} LU, stems "
                            "measure {:.2f} LU",
                            item.id, *item.default_ld, measured));
  }
  return *item.default_ld;
}

RenderedMix RenderVersion(const StemPair& stems, double offset,
                          double target_lufs) {
  if (!std::isfinite(offset)) {
    throw Error(ErrorCode::kInvalidArgument, "offset must be finite");
  }
  const AudioClip mix = Combine(1.0, stems.fg, DbToGain(offset), stems.bg);
  const loudness::LoudnessReading reading = loudness::IntegratedLoudness(mix);
  if (reading.below_gate()) {
    throw Error(ErrorCode::kUnmeasurableMix,
                fmt::format("mix at offset {:+.1f} LU is below gate", offset));
  }
  const double gain = loudness::GainToTarget(reading, target_lufs);
  AudioClip normalized = loudness::ApplyGain(mix, gain);
  const loudness::LoudnessReading check =
      loudness::IntegratedLoudness(normalized);
  if (check.below_gate()) {
    throw Error(ErrorCode::kUnmeasurableMix,
                fmt::format("normalized mix at offset {:+.1f} LU is below gate",
                            offset));
  }
  return RenderedMix{std::move(normalized), *check.lufs, gain};
}

double MeasureRenderedLd(const SeparatedStems& stems, double offset,
                         double target_lufs) {
  // Throws like the real render when the mix itself is unmeasurable.
  RenderVersion(stems.estimate, offset, target_lufs);
  // mix = fg_est + a * bg_est = (1 + a g) fg + (g + a) bg. Each component is
  // a scaled source and the meter is exact under scaling, so the sources are
  // metered unscaled and the gains added in dB; the normalization gain
  // cancels. Metering the scaled background directly would put it under the
  // absolute gate near the grid end (-40 LU below a -23 LUFS mix).
  const double a = DbToGain(offset);
  const double g = stems.leak_gain;
  return ComputeLd(stems.sources) + 20.0 * std::log10((1.0 + a * g) / (g + a));
}

std::vector<VersionSummary> RenderVersions(const ItemSpec& item,
                                           double default_ld,
                                           const StemPair& stems,
                                           const VersionVisitor& visit,
                                           const RenderOptions& options) {
  const std::vector<double>& offsets = item.grid.offsets();
  std::vector<std::optional<VersionSummary>> summaries(offsets.size());

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&] {
    while (!failed.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= offsets.size()) return;
      const double offset = offsets[i];
      if (options.skip && options.skip(offset)) continue;
      try {
        RenderedMix mix = RenderVersion(stems, offset, item.target_loudness);
        RenderedVersion version{offset, default_ld - offset, mix.measured_lufs,
                                std::move(mix.audio)};
        summaries[i] = VersionSummary{offset, version.nominal_ld,
                                      version.measured_lufs};
        if (visit) visit(std::move(version));
      } catch (const Error& e) {
        std::lock_guard lock(error_mutex);
        if (!first_error) {
          first_error = std::make_exception_ptr(Error(
              e.code(), fmt::format("item {} offset {:+.1f} LU: {}", item.id,
                                    offset, e.what())));
        }
        failed = true;
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        failed = true;
      }
    }
  };

  std::size_t threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, offsets.size());
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (first_error) std::rethrow_exception(first_error);

  std::vector<VersionSummary> out;
  for (const auto& s : summaries) {
    if (s) out.push_back(*s);
  }
  return out;
}

VersionSet RenderVersionSet(const ItemSpec& item, double default_ld,
                            const StemPair& stems) {
  std::mutex mutex;
  std::vector<RenderedVersion> collected;
  RenderVersions(item, default_ld, stems, [&](RenderedVersion&& v) {
    std::lock_guard lock(mutex);
    collected.push_back(std::move(v));
  });
  std::sort(collected.begin(), collected.end(),
            [](const RenderedVersion& a, const RenderedVersion& b) {
              return a.offset > b.offset;
            });
  return VersionSet{item.id, std::move(collected)};
}

double MaxAchievableLd(const SeparatedStems& stems, const LdGrid& grid,
                       double target_lufs) {
  return MeasureRenderedLd(stems, grid.min_offset(), target_lufs);
}

}  // namespace adjustsat::stimulus
