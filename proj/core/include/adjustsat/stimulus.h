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

#ifndef ADJUSTSAT_STIMULUS_H_
#define ADJUSTSAT_STIMULUS_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "adjustsat/audio_clip.h"
#include "adjustsat/ld_grid.h"
#include "adjustsat/loudness.h"

namespace adjustsat::stimulus {

enum class DeMethod { kOo, kDs };
enum class ProdType { kAr, kWdr };
enum class ContentTag { kFemaleVoiceOver, kMaleVoiceOver, kMusic, kNoise };

std::string_view DeMethodName(DeMethod m);     // "OO" / "DS"
std::string_view ProdTypeName(ProdType p);     // "AR" / "WDR"
std::string_view ContentTagName(ContentTag t); // "fVO" / "mVO" / ...
DeMethod ParseDeMethod(std::string_view s);
ProdType ParseProdType(std::string_view s);
ContentTag ParseContentTag(std::string_view s);

inline constexpr double kDefaultLeakageDb = -20.0;
inline constexpr double kDefaultLdTolerance = 0.5;

// Foreground (speech) and background (everything else) of one item. Both
// stems share rate and channel count; the shorter one is zero-padded.
struct StemPair {
  AudioClip fg;
  AudioClip bg;
};

// Throws kStemMismatch when rates or channel counts differ.
StemPair MakeStemPair(AudioClip fg, AudioClip bg);

// Static broadband leakage between the two separated estimates.
// An empty leakage means separation is perfect.
class LeakageModel {
 public:
  static LeakageModel Disabled() { return LeakageModel(std::nullopt); }
  // Throws kInvalidArgument for leakage above 0 dB or non-finite values.
  static LeakageModel Of(double leakage_db);
  static LeakageModel FromOptional(std::optional<double> leakage_db);

  std::optional<double> leakage_db() const noexcept { return leakage_db_; }
  // Amplitude ratio g = 10^(leakage/20), 0 when disabled.
  double gain() const noexcept;

 private:
  explicit LeakageModel(std::optional<double> db) : leakage_db_(db) {}
  std::optional<double> leakage_db_;
};

// Estimated stems together with the sources they were derived from.
// estimate.fg = sources.fg + g * sources.bg and
// estimate.bg = sources.bg + g * sources.fg with g = leak_gain.
struct SeparatedStems {
  StemPair estimate;
  StemPair sources;
  double leak_gain = 0.0;
};

// Stand-in for dialogue separation: mixes each stem into the other at the
// model's leakage. A disabled model returns the stems unchanged.
SeparatedStems SimulateDs(const StemPair& stems, const LeakageModel& model);

struct ItemSpec {
  std::string id;
  std::string label;
  DeMethod de_method = DeMethod::kOo;
  ProdType prod_type = ProdType::kWdr;
  std::set<ContentTag> content_tags;
  LdGrid grid;
  std::optional<double> default_ld;
  double target_loudness = loudness::kDefaultTargetLufs;
  std::optional<double> leakage_db;
};

// Checks the cross-field rules: non-empty id, DS implies a leakage, leakage
// is at most 0 dB, OO carries none. Throws kInvalidItem.
void ValidateItem(const ItemSpec& item);

// Integrated loudness of fg minus bg in LU. Throws kUnmeasurableStem when
// either stem is below gate.
double ComputeLd(const StemPair& stems);

// The item's default LD measured on the ingested (pre-separation) stems.
// When the item declares one it must agree within 0.5 LU, otherwise
// kDefaultLdMismatch; the declared value is returned.
double ResolveDefaultLd(const ItemSpec& item, const StemPair& ingested);

struct RenderedMix {
  AudioClip audio;
  double measured_lufs = 0.0;
  double normalization_db = 0.0;
};

// fg + 10^(offset/20) * bg, normalized so its integrated loudness is
// `target_lufs`. Throws kUnmeasurableMix when the mix is below gate.
RenderedMix RenderVersion(const StemPair& stems, double offset,
                          double target_lufs);

// LD actually contained in the version rendered at `offset`: the true
// speech and background components of the mix, each carried through the
// offset and leakage gains. The sources are metered unscaled, so a
// background pushed far down the grid is not lost to the absolute gate.
double MeasureRenderedLd(const SeparatedStems& stems, double offset,
                         double target_lufs);

struct RenderedVersion {
  double offset = 0.0;
  double nominal_ld = 0.0;  // default_ld - offset
  double measured_lufs = 0.0;
  AudioClip audio;
};

struct VersionSummary {
  double offset = 0.0;
  double nominal_ld = 0.0;
  double measured_lufs = 0.0;
};

struct VersionSet {
  std::string item_id;
  std::vector<RenderedVersion> versions;  // grid order, descending offset
};

struct RenderOptions {
  // 0 picks the hardware concurrency.
  std::size_t threads = 0;
  // Offsets for which this returns true are not rendered (cache hits).
  std::function<bool(double offset)> skip;
};

// Receives every rendered version. May be invoked concurrently from worker
// threads, never twice for one offset.
using VersionVisitor = std::function<void(RenderedVersion&&)>;

// Renders every grid offset of `item` from `stems` (already separated for
// DS items). Errors are rethrown with the failing offset in the message.
// Returns the summaries of the rendered (non-skipped) versions in grid order.
std::vector<VersionSummary> RenderVersions(const ItemSpec& item,
                                           double default_ld,
                                           const StemPair& stems,
                                           const VersionVisitor& visit,
                                           const RenderOptions& options = {});

// Collects the full set in memory. Intended for short stems.
VersionSet RenderVersionSet(const ItemSpec& item, double default_ld,
                            const StemPair& stems);

// LD of the version at the grid's most negative offset, the attainable
// ceiling under leakage.
double MaxAchievableLd(const SeparatedStems& stems, const LdGrid& grid,
                       double target_lufs = loudness::kDefaultTargetLufs);

}  // namespace adjustsat::stimulus

#endif  // ADJUSTSAT_STIMULUS_H_
