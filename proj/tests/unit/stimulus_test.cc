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

#include <cmath>
#include <mutex>
#include <set>

#include <gtest/gtest.h>

#include "adjustsat/error.h"
#include "oracles/loudness_oracle.h"
#include "support/signals.h"
#include "support/study.h"

namespace adjustsat::stimulus {
namespace {

using testing::Tone;

StemPair Tones(int rate, double seconds, double fg_db, double bg_db,
               std::size_t channels = 1) {
  return MakeStemPair(Tone(rate, seconds, 997.0, fg_db, channels),
                      Tone(rate, seconds, 330.0, bg_db, channels));
}

ItemSpec Item(const char* grid, DeMethod method = DeMethod::kOo) {
  ItemSpec item;
  item.id = "x";
  item.label = "X";
  item.de_method = method;
  item.grid = ParseGrid(grid);
  if (method == DeMethod::kDs) item.leakage_db = -20.0;
  return item;
}

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no adjustsat::Error thrown";
  return ErrorCode::kInvalidArgument;
}

TEST(StimulusTest, Names) {
  EXPECT_EQ(DeMethodName(DeMethod::kDs), "DS");
  EXPECT_EQ(ProdTypeName(ProdType::kAr), "AR");
  EXPECT_EQ(ContentTagName(ContentTag::kMaleVoiceOver), "mVO");
  EXPECT_EQ(ParseDeMethod("OO"), DeMethod::kOo);
  EXPECT_EQ(ParseProdType("WDR"), ProdType::kWdr);
  EXPECT_EQ(ParseContentTag("music"), ContentTag::kMusic);
  EXPECT_EQ(CodeOf([] { ParseDeMethod("XX"); }), ErrorCode::kInvalidItem);
}

TEST(StimulusTest, StemPairPadsAndChecksGeometry) {
  const StemPair p = MakeStemPair(Tone(8000, 1.0, 100, -6, 1), Tone(8000, 0.5, 100, -6, 1));
  EXPECT_EQ(p.bg.num_frames(), 8000u);
  EXPECT_EQ(p.bg.channel(0)[7999], 0.0);
  EXPECT_EQ(CodeOf([] { MakeStemPair(Tone(8000, 1, 100, -6, 1), Tone(16000, 1, 100, -6, 1)); }),
            ErrorCode::kStemMismatch);
  EXPECT_EQ(CodeOf([] { MakeStemPair(Tone(8000, 1, 100, -6, 1), Tone(8000, 1, 100, -6, 2)); }),
            ErrorCode::kStemMismatch);
}

TEST(StimulusTest, LeakageModel) {
  EXPECT_EQ(LeakageModel::Disabled().gain(), 0.0);
  EXPECT_NEAR(LeakageModel::Of(-20.0).gain(), 0.1, 1e-15);
  EXPECT_EQ(LeakageModel::Of(0.0).gain(), 1.0);
  EXPECT_EQ(CodeOf([] { LeakageModel::Of(0.5); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { LeakageModel::Of(NAN); }), ErrorCode::kInvalidArgument);
  EXPECT_FALSE(LeakageModel::FromOptional(std::nullopt).leakage_db());
}

TEST(StimulusTest, SimulateDsMixesEachStemIntoTheOther) {
  const StemPair s = Tones(8000, 0.5, -10, -20);
  const SeparatedStems d = SimulateDs(s, LeakageModel::Of(-20.0));
  const double g = DbToGain(-20.0);
  for (std::size_t i = 0; i < s.fg.num_frames(); ++i) {
    EXPECT_EQ(d.estimate.fg.channel(0)[i], s.fg.channel(0)[i] + g * s.bg.channel(0)[i]);
    EXPECT_EQ(d.estimate.bg.channel(0)[i], s.bg.channel(0)[i] + g * s.fg.channel(0)[i]);
  }
  EXPECT_EQ(d.sources.fg, s.fg);
  const SeparatedStems off = SimulateDs(s, LeakageModel::Disabled());
  EXPECT_EQ(off.estimate.fg, s.fg);
  EXPECT_EQ(off.leak_gain, 0.0);
}

TEST(StimulusTest, ValidateItem) {
  EXPECT_NO_THROW(ValidateItem(Item("1:1:0")));
  EXPECT_NO_THROW(ValidateItem(Item("1:1:0", DeMethod::kDs)));
  ItemSpec no_id = Item("1:1:0");
  no_id.id.clear();
  EXPECT_EQ(CodeOf([&] { ValidateItem(no_id); }), ErrorCode::kInvalidItem);
  ItemSpec ds = Item("1:1:0", DeMethod::kDs);
  ds.leakage_db.reset();
  EXPECT_EQ(CodeOf([&] { ValidateItem(ds); }), ErrorCode::kInvalidItem);
  ItemSpec oo = Item("1:1:0");
  oo.leakage_db = -20.0;
  EXPECT_EQ(CodeOf([&] { ValidateItem(oo); }), ErrorCode::kInvalidItem);
  ds.leakage_db = 3.0;
  EXPECT_EQ(CodeOf([&] { ValidateItem(ds); }), ErrorCode::kInvalidItem);
  ItemSpec empty;
  empty.id = "e";
  EXPECT_EQ(CodeOf([&] { ValidateItem(empty); }), ErrorCode::kInvalidItem);
}

TEST(StimulusTest, ComputeLdAgreesWithOracle) {
  const StemPair s = Tones(48000, 4.0, -20.0, -31.0, 2);
  const double oracle = *oracle::IntegratedLoudness48k(s.fg) -
                        *oracle::IntegratedLoudness48k(s.bg);
  EXPECT_NEAR(ComputeLd(s), oracle, 1e-6);
  // Equal-level 997/330 Hz tones differ by the K-weighting alone.
  EXPECT_NEAR(ComputeLd(Tones(48000, 4.0, -23.0, -23.0)), 0.753, 0.005);
  EXPECT_EQ(CodeOf([] {
              ComputeLd(MakeStemPair(Tone(8000, 1, 100, -6, 1),
                                     AudioClip::Silence(8000, 1, 8000)));
            }),
            ErrorCode::kUnmeasurableStem);
}

TEST(StimulusTest, ResolveDefaultLd) {
  const StemPair s = Tones(16000, 2.0, -20.0, -30.0);
  const double measured = ComputeLd(s);
  ItemSpec item = Item("1:1:0");
  EXPECT_DOUBLE_EQ(ResolveDefaultLd(item, s), measured);
  item.default_ld = measured + 0.4;
  EXPECT_DOUBLE_EQ(ResolveDefaultLd(item, s), measured + 0.4);
  item.default_ld = measured - 0.6;
  EXPECT_EQ(CodeOf([&] { ResolveDefaultLd(item, s); }), ErrorCode::kDefaultLdMismatch);
}

TEST(StimulusTest, RenderVersionHitsTarget) {
  const StemPair s = Tones(16000, 2.0, -10.0, -14.0);
  for (double offset : {12.0, 0.0, -40.0}) {
    const RenderedMix m = RenderVersion(s, offset, -23.0);
    EXPECT_NEAR(m.measured_lufs, -23.0, 1e-9) << offset;
    EXPECT_NEAR(*loudness::IntegratedLoudness(m.audio).lufs, -23.0, 1e-9);
  }
  const StemPair silent{AudioClip::Silence(16000, 1, 16000), AudioClip::Silence(16000, 1, 16000)};
  EXPECT_EQ(CodeOf([&] { RenderVersion(silent, 0.0, -23.0); }), ErrorCode::kUnmeasurableMix);
  EXPECT_EQ(CodeOf([&] { RenderVersion(s, INFINITY, -23.0); }), ErrorCode::kInvalidArgument);
}

TEST(StimulusTest, RenderedLdFollowsClosedForm) {
  const StemPair s = Tones(16000, 2.0, -20.0, -30.0);
  const double ld0 = ComputeLd(s);
  for (std::optional<double> leak : {std::optional<double>{}, std::optional<double>{-20.0},
                                     std::optional<double>{-6.0}}) {
    const SeparatedStems d = SimulateDs(s, LeakageModel::FromOptional(leak));
    for (double offset : {9.6, 0.0, -15.0, -40.0}) {
      EXPECT_NEAR(MeasureRenderedLd(d, offset, -23.0),
                  oracle::LeakyRenderLd(ld0, offset, leak), 1e-6)
          << offset;
    }
  }
}

TEST(StimulusTest, MaxAchievableLdIsTheGridEnd) {
  const StemPair s = Tones(16000, 2.0, -20.0, -30.0);
  const SeparatedStems d = SimulateDs(s, LeakageModel::Of(-20.0));
  const LdGrid grid = ParseGrid(testing::kWdrGrid);
  EXPECT_DOUBLE_EQ(MaxAchievableLd(d, grid), MeasureRenderedLd(d, -40.0, -23.0));
  EXPECT_LT(MaxAchievableLd(d, grid), ComputeLd(s) + 20.0 + 1e-9);
}

TEST(StimulusTest, RenderVersionsCoversTheGridInOrder) {
  const StemPair s = Tones(16000, 1.0, -20.0, -28.0);
  const ItemSpec item = Item(testing::kWdrGrid);
  const VersionSet set = RenderVersionSet(item, 8.0, s);
  ASSERT_EQ(set.versions.size(), 41u);
  for (std::size_t i = 0; i < 41; ++i) {
    EXPECT_EQ(set.versions[i].offset, item.grid.offsets()[i]);
    EXPECT_EQ(set.versions[i].nominal_ld, 8.0 - item.grid.offsets()[i]);
    EXPECT_NEAR(set.versions[i].measured_lufs, -23.0, 1e-9);
  }
}

TEST(StimulusTest, RenderVersionsIsThreadCountInvariant) {
  const StemPair s = Tones(16000, 1.0, -20.0, -28.0);
  const ItemSpec item = Item("+4:1:-4");
  auto render = [&](std::size_t threads) {
    std::mutex mu;
    std::map<double, AudioClip> out;
    RenderVersions(item, 5.0, s, [&](RenderedVersion&& v) {
      std::lock_guard lock(mu);
      EXPECT_TRUE(out.emplace(v.offset, std::move(v.audio)).second);
    }, RenderOptions{threads, {}});
    return out;
  };
  const auto one = render(1);
  EXPECT_EQ(one.size(), 9u);
  EXPECT_EQ(render(4), one);
}

TEST(StimulusTest, RenderVersionsSkipsAndReportsFailures) {
  const StemPair s = Tones(16000, 1.0, -20.0, -28.0);
  const ItemSpec item = Item("+4:1:-4");
  std::set<double> seen;
  std::mutex mu;
  const auto summaries = RenderVersions(item, 5.0, s, [&](RenderedVersion&& v) {
    std::lock_guard lock(mu);
    seen.insert(v.offset);
  }, RenderOptions{2, [](double o) { return o > 0.0; }});
  EXPECT_EQ(summaries.size(), 5u);
  EXPECT_EQ(seen, (std::set<double>{0, -1, -2, -3, -4}));
  EXPECT_EQ(summaries.front().offset, 0.0);

  const StemPair silent{AudioClip::Silence(16000, 1, 16000), AudioClip::Silence(16000, 1, 16000)};
  try {
    RenderVersions(item, 5.0, silent, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnmeasurableMix);
    EXPECT_NE(std::string(e.what()).find("offset"), std::string::npos);
  }
}

}  // namespace
}  // namespace adjustsat::stimulus
