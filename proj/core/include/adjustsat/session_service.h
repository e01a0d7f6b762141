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

#ifndef ADJUSTSAT_SESSION_SERVICE_H_
#define ADJUSTSAT_SESSION_SERVICE_H_

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "adjustsat/audio_sink.h"
#include "adjustsat/event_log.h"
#include "adjustsat/manifest.h"
#include "adjustsat/session.h"
#include "adjustsat/version_cache.h"

namespace adjustsat::harness {

// Playlist of a prepared manifest: default LDs and durations come from the
// cache index. Throws kCacheMissing naming the first unprepared item.
std::shared_ptr<const session::Playlist> BuildPlaylist(
    const Manifest& manifest, const stimulus::VersionCache& cache);

// "/cache/<item_id>/v+0.0.wav"
std::string VersionUrl(const session::VersionId& version);

nlohmann::json ViewToJson(const session::TrialView& view);

struct ServiceConfig {
  std::filesystem::path results_dir;  // logs in sessions/, rows in results.csv
  std::chrono::milliseconds reconnect_grace{60'000};
};

using ConnectionId = std::uint64_t;
using SteadyTime = std::chrono::steady_clock::time_point;

// Transport-independent protocol handler. Client messages:
//   {"type": "hello", "pid": "P01"}
//   {"type": "event", "event": {"t": 1200, "kind": "KnobDelta", "detents": 1}}
// Replies go to the sending connection only. Every reply batch ends with a
// view, busy or error message:
//   {"type": "audio", "item_id", "offset", "url", "position_ms", "paused"}
//                                              when the audible version changes
//   {"type": "view", "view": {...}}            after every transition
//   {"type": "busy"}                           another session is active
//   {"type": "error", "code", "message"}       rejected message or event
// One session at a time. A dropped owner pauses the session; the same pid
// may reconnect within the grace period, after which the session is closed
// as incomplete (its log stays, no result rows are written).
class SessionService {
 public:
  using WallClock = std::function<std::chrono::system_clock::time_point()>;

  SessionService(std::shared_ptr<const session::Playlist> playlist,
                 const stimulus::VersionLookup& versions, ServiceConfig config,
                 AudioSink* sink = nullptr, WallClock wall_clock = {});

  std::vector<nlohmann::json> OnMessage(ConnectionId conn,
                                        const nlohmann::json& message,
                                        SteadyTime now = SteadyTime::clock::now());
  // Unparsable text yields one error reply.
  std::vector<nlohmann::json> OnText(ConnectionId conn, std::string_view text,
                                     SteadyTime now = SteadyTime::clock::now());
  void OnDisconnect(ConnectionId conn, SteadyTime now = SteadyTime::clock::now());
  // Closes a session whose owner stayed away past the grace period.
  void Tick(SteadyTime now = SteadyTime::clock::now());

  bool has_active_session() const;
  std::optional<std::string> active_pid() const;
  // Completed sessions since start.
  std::size_t completed_sessions() const;
  std::size_t abandoned_sessions() const;
  std::filesystem::path results_csv() const;
  const SnapshotChannel& playback() const noexcept { return playback_; }

 private:
  struct Active {
    session::LiveSession live;
    std::unique_ptr<session::EventLogWriter> log;
    std::optional<ConnectionId> owner;
    std::optional<SteadyTime> dropped_at;
  };

  std::vector<nlohmann::json> Hello(ConnectionId conn, const nlohmann::json& m);
  std::vector<nlohmann::json> Event(ConnectionId conn, const nlohmann::json& m);
  std::vector<nlohmann::json> Publish(const std::optional<PlaybackSnapshot>& before,
                                      bool force_audio);
  std::filesystem::path NewLogPath(const std::string& pid) const;
  void Expire(SteadyTime now);

  std::shared_ptr<const session::Playlist> playlist_;
  const stimulus::VersionLookup& versions_;
  ServiceConfig config_;
  AudioSink* sink_;
  WallClock wall_clock_;

  mutable std::mutex mu_;
  std::optional<Active> active_;
  std::optional<PlaybackSnapshot> last_snapshot_;
  SnapshotChannel playback_;
  std::size_t completed_ = 0;
  std::size_t abandoned_ = 0;
};

}  // namespace adjustsat::harness

#endif  // ADJUSTSAT_SESSION_SERVICE_H_
