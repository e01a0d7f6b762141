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

#include "adjustsat/session_service.h"

#include <filesystem>

#include <gtest/gtest.h>

#include "adjustsat/error.h"
#include "adjustsat/event_log.h"
#include "adjustsat/results_io.h"
#include "support/signals.h"
#include "support/study.h"

namespace adjustsat::harness {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using std::chrono::seconds;

std::chrono::system_clock::time_point FixedWallClock() {
  return std::chrono::sys_days{std::chrono::year{2026} / 1 / 2} + std::chrono::hours{3} +
         std::chrono::minutes{4} + std::chrono::seconds{5};
}

json Event(const session::SessionEvent& e) {
  return json{{"type", "event"}, {"event", session::EventToJson(e)}};
}

json Hello(const std::string& pid) { return json{{"type", "hello"}, {"pid", pid}}; }

class SessionServiceTest : public ::testing::Test {
 protected:
  SessionServiceTest()
      : playlist_(testing::PresentationPlaylist(30'000)),
        service_(playlist_, all_, ServiceConfig{dir_.path(), std::chrono::milliseconds{60'000}},
                 &sink_, FixedWallClock) {}

  std::vector<json> Send(ConnectionId conn, const session::SessionEvent& e) {
    return service_.OnMessage(conn, Event(e), t0_);
  }

  testing::TempDir dir_;
  testing::AllVersionsPresent all_;
  std::shared_ptr<const session::Playlist> playlist_;
  HeadlessSink sink_;
  SessionService service_;
  SteadyTime t0_ = SteadyTime{} + seconds(1000);
};

TEST_F(SessionServiceTest, HelloStartsASession) {
  const auto replies = service_.OnMessage(1, Hello("P01"), t0_);
  ASSERT_EQ(replies.size(), 2u);
  EXPECT_EQ(replies[0]["type"], "audio");
  EXPECT_EQ(replies[0]["url"], "/cache/training/v+0.0.wav");
  EXPECT_EQ(replies[0]["position_ms"], 0);
  EXPECT_EQ(replies[1]["type"], "view");
  EXPECT_EQ(replies[1]["view"]["phase"], "Training");
  EXPECT_EQ(replies[1]["view"]["counter"], "0 / 16");
  EXPECT_EQ(replies[1]["view"]["active"], "A");
  EXPECT_TRUE(replies[1]["view"]["satisfaction_label"].is_null());
  EXPECT_EQ(service_.active_pid(), "P01");
  EXPECT_EQ(sink_.version()->item_id, "training");
  EXPECT_TRUE(fs::exists(dir_ / "sessions" / "P01-20260102T030405Z.jsonl"));
}

TEST_F(SessionServiceTest, AudioOnlyWhenTheVersionChanges) {
  service_.OnMessage(1, Hello("P01"), t0_);
  auto r = Send(1, {1200, session::KnobDelta{2}});
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0]["type"], "audio");
  EXPECT_EQ(r[0]["offset"], -2.0);
  EXPECT_EQ(r[0]["url"], "/cache/training/v-2.0.wav");
  EXPECT_EQ(r[0]["position_ms"], 1200);
  r = Send(1, {1500, session::PauseToggle{}});
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0]["view"]["paused"], true);
  EXPECT_TRUE(sink_.paused());
  r = Send(1, {1600, session::PressKnob{}});
  EXPECT_EQ(r.back()["view"]["satisfaction_label"], "The same as");
  EXPECT_EQ(r.back()["view"]["satisfaction_label_de"], "genauso wie");
}

TEST_F(SessionServiceTest, SecondParticipantIsBusy) {
  service_.OnMessage(1, Hello("P01"), t0_);
  const auto r = service_.OnMessage(2, Hello("P02"), t0_);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0]["type"], "busy");
  const auto e = service_.OnMessage(2, Event({10, session::PressKnob{}}), t0_);
  EXPECT_EQ(e[0]["type"], "error");
  // Owner re-sending hello gets the current state again.
  EXPECT_EQ(service_.OnMessage(1, Hello("P01"), t0_).size(), 2u);
}

TEST_F(SessionServiceTest, RejectionsCarryTheErrorCode) {
  EXPECT_EQ(service_.OnText(1, "{oops", t0_)[0]["code"], "MalformedInput");
  EXPECT_EQ(service_.OnMessage(1, json{{"type", "dance"}}, t0_)[0]["code"], "MalformedInput");
  EXPECT_EQ(service_.OnMessage(1, json{{"type", "hello"}}, t0_)[0]["code"], "InvalidArgument");
  EXPECT_EQ(service_.OnMessage(1, Event({1, session::PressKnob{}}), t0_)[0]["type"], "error");
  service_.OnMessage(1, Hello("P01"), t0_);
  Send(1, {100, session::KnobDelta{1}});
  auto r = Send(1, {200, session::VolumeSet{0.1}});
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0]["code"], "VolumeChangeLocked");
  r = Send(1, {50, session::PressKnob{}});
  EXPECT_EQ(r[0]["code"], "OutOfOrder");
  r = service_.OnMessage(1, json{{"type", "event"}, {"event", {{"t", 300}, {"kind", "Jump"}}}}, t0_);
  EXPECT_EQ(r[0]["code"], "MalformedLog");
  const auto log = session::ReadEventLog(dir_ / "sessions" / "P01-20260102T030405Z.jsonl");
  EXPECT_EQ(log.events.size(), 1u);
}

TEST_F(SessionServiceTest, CompletedSessionWritesResults) {
  service_.OnMessage(1, Hello("P01"), t0_);
  const auto events = testing::ScriptedSession(*playlist_);
  std::vector<json> last;
  for (const auto& e : events) {
    last = Send(1, e);
    ASSERT_NE(last.back()["type"], "error") << last.back().dump();
  }
  EXPECT_EQ(last.back()["view"]["phase"], "Done");
  EXPECT_EQ(last.back()["view"]["message"], "Vielen Dank!");
  EXPECT_FALSE(service_.has_active_session());
  EXPECT_EQ(service_.completed_sessions(), 1u);
  const auto rows = analysis::ReadResultsCsv(service_.results_csv());
  ASSERT_EQ(rows.size(), 16u);
  const auto log = session::ReadEventLog(dir_ / "sessions" / "P01-20260102T030405Z.jsonl");
  EXPECT_EQ(log.header.playlist_hash, playlist_->Hash());
  const auto replayed = session::Replay(log.events, "P01", playlist_);
  EXPECT_EQ(analysis::EncodeResultsCsv(replayed), analysis::ReadTextFile(service_.results_csv()));
  EXPECT_TRUE(sink_.paused());

  // A new participant may start afterwards; the log name does not collide.
  EXPECT_EQ(service_.OnMessage(2, Hello("P01"), t0_)[0]["type"], "audio");
  EXPECT_TRUE(fs::exists(dir_ / "sessions" / "P01-20260102T030405Z-2.jsonl"));
}

TEST_F(SessionServiceTest, DropAndReconnect) {
  service_.OnMessage(1, Hello("P01"), t0_);
  Send(1, {1000, session::KnobDelta{3}});
  service_.OnDisconnect(1, t0_);
  EXPECT_TRUE(sink_.paused());
  EXPECT_EQ(service_.OnMessage(2, Hello("P02"), t0_ + seconds(5))[0]["type"], "busy");
  const auto r = service_.OnMessage(3, Hello("P01"), t0_ + seconds(30));
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0]["offset"], -3.0);
  EXPECT_EQ(r[0]["paused"], true);
  EXPECT_EQ(r[1]["view"]["paused"], true);
  EXPECT_EQ(Send(3, {2000, session::PauseToggle{}})[0]["view"]["paused"], false);
  // The old connection id has no say any more.
  EXPECT_EQ(Send(1, {2100, session::PressKnob{}})[0]["type"], "error");
}

TEST_F(SessionServiceTest, GracePeriodExpiry) {
  service_.OnMessage(1, Hello("P01"), t0_);
  Send(1, {1000, session::KnobDelta{3}});
  service_.OnDisconnect(1, t0_);
  service_.Tick(t0_ + seconds(59));
  EXPECT_TRUE(service_.has_active_session());
  service_.Tick(t0_ + seconds(60));
  EXPECT_FALSE(service_.has_active_session());
  EXPECT_EQ(service_.abandoned_sessions(), 1u);
  EXPECT_FALSE(fs::exists(service_.results_csv()));
  const auto log = session::ReadEventLog(dir_ / "sessions" / "P01-20260102T030405Z.jsonl");
  ASSERT_EQ(log.events.size(), 2u);
  EXPECT_EQ(log.events[1], (session::SessionEvent{1000, session::PauseToggle{}}));
  EXPECT_EQ(service_.OnMessage(2, Hello("P02"), t0_ + seconds(61))[0]["type"], "audio");
}

TEST_F(SessionServiceTest, PlaybackChannelFollowsTheSession) {
  service_.OnMessage(1, Hello("P01"), t0_);
  Send(1, {700, session::KnobDelta{1}});
  const auto snap = service_.playback().Latest();
  ASSERT_TRUE(snap);
  EXPECT_EQ(snap->version, (session::VersionId{"training", -1.0}));
  EXPECT_EQ(snap->position_ms, 700);
}

TEST(SessionServiceHelpersTest, VersionUrlAndCacheCheck) {
  EXPECT_EQ(VersionUrl({"ar1_ds", -0.8}), "/cache/ar1_ds/v-0.8.wav");
  testing::TempDir dir;
  const Manifest m = LoadManifest(testing::WriteStudy(dir.path()));
  stimulus::VersionCache cache(m.output_dir);
  try {
    BuildPlaylist(m, cache);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCacheMissing);
    EXPECT_NE(std::string(e.what()).find("training"), std::string::npos);
  }
}

}  // namespace
}  // namespace adjustsat::harness
