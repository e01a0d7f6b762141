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

#include <cctype>
#include <cmath>
#include <ctime>

#include <fmt/chrono.h>
#include <fmt/format.h>

#include "adjustsat/error.h"
#include "adjustsat/results_io.h"

namespace adjustsat::harness {

using nlohmann::json;

namespace {

json ErrorMessage(ErrorCode code, std::string_view message) {
  return json{{"type", "error"}, {"code", ErrorCodeName(code)},
              {"message", message}};
}

std::string FileSafe(std::string_view pid) {
  std::string out;
  for (char c : pid) {
    const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_';
    out.push_back(ok ? c : '_');
  }
  return out;
}

}  // namespace

std::shared_ptr<const session::Playlist> BuildPlaylist(
    const Manifest& manifest, const stimulus::VersionCache& cache) {
  std::vector<session::PlaylistEntry> entries;
  for (const PlaylistRef& ref : manifest.playlist) {
    stimulus::ItemSpec item = manifest.Item(ref.item_id).spec;
    const std::optional<stimulus::ItemIndex> index = cache.LoadIndex(item.id);
    if (!index || !cache.HasCompleteSet(item)) {
      throw Error(ErrorCode::kCacheMissing,
                  fmt::format("item {} has no complete version set under {}; "
                              "run prepare first",
                              item.id, cache.root().string()));
    }
    item.default_ld = index->default_ld;
    entries.push_back(session::PlaylistEntry{
        std::move(item), index->default_ld,
        static_cast<std::int64_t>(std::llround(index->duration_ms()))});
  }
  return session::Playlist::Create(std::move(entries));
}

std::string VersionUrl(const session::VersionId& version) {
  return "/cache/" + version.item_id + "/" +
         stimulus::VersionCache::VersionFileName(version.offset);
}

json ViewToJson(const session::TrialView& v) {
  json j{{"phase", session::PhaseName(v.phase)},
         {"item_number", v.item_number},
         {"item_count", v.item_count},
         {"counter", v.counter},
         {"active", v.active == session::Version::kA ? "A" : "B"},
         {"paused", v.paused},
         {"message", v.message},
         {"satisfaction_label", nullptr},
         {"satisfaction_label_de", nullptr},
         {"satisfaction_position", nullptr},
         {"knob_fraction", nullptr}};
  if (v.satisfaction_label) {
    j["satisfaction_label"] = session::EnglishLabel(*v.satisfaction_label);
    j["satisfaction_label_de"] = session::GermanLabel(*v.satisfaction_label);
  }
  if (v.satisfaction_position) j["satisfaction_position"] = *v.satisfaction_position;
  if (v.knob_fraction) j["knob_fraction"] = *v.knob_fraction;
  return j;
}

SessionService::SessionService(std::shared_ptr<const session::Playlist> playlist,
                               const stimulus::VersionLookup& versions,
                               ServiceConfig config, AudioSink* sink,
                               WallClock wall_clock)
    : playlist_(std::move(playlist)),
      versions_(versions),
      config_(std::move(config)),
      sink_(sink),
      wall_clock_(wall_clock ? std::move(wall_clock)
                             : [] { return std::chrono::system_clock::now(); }) {
  if (!playlist_) throw Error(ErrorCode::kEmptyPlaylist, "no playlist");
}

std::vector<json> SessionService::OnText(ConnectionId conn, std::string_view text,
                                         SteadyTime now) {
  json message;
  try {
    message = json::parse(text);
  } catch (const json::exception&) {
    return {ErrorMessage(ErrorCode::kMalformedInput, "message is not JSON")};
  }
  return OnMessage(conn, message, now);
}

std::vector<json> SessionService::OnMessage(ConnectionId conn, const json& message,
                                            SteadyTime now) {
  std::lock_guard lock(mu_);
  Expire(now);
  try {
    const std::string type =
        message.is_object() ? message.value("type", "") : std::string();
    if (type == "hello") return Hello(conn, message);
    if (type == "event") return Event(conn, message);
    return {ErrorMessage(ErrorCode::kMalformedInput,
                         "unknown message type '" + type + "'")};
  } catch (const Error& e) {
    return {ErrorMessage(e.code(), e.what())};
  } catch (const json::exception& e) {
    return {ErrorMessage(ErrorCode::kMalformedInput, e.what())};
  }
}

std::vector<json> SessionService::Hello(ConnectionId conn, const json& m) {
  const json& pid_field = m.contains("pid") ? m.at("pid") : json();
  if (!pid_field.is_string() || pid_field.get<std::string>().empty()) {
    return {ErrorMessage(ErrorCode::kInvalidArgument, "hello needs a pid")};
  }
  const std::string pid = pid_field.get<std::string>();
  if (active_) {
    const std::string& owner_pid = active_->live.state().participant_id;
    if (active_->owner == conn && owner_pid == pid) return Publish(std::nullopt, true);
    if (!active_->owner && owner_pid == pid) {
      active_->owner = conn;
      active_->dropped_at.reset();
      return Publish(std::nullopt, true);
    }
    return {json{{"type", "busy"},
                 {"message", "another session is in progress"}}};
  }

  session::LiveSession live(pid, playlist_, versions_);
  std::filesystem::create_directories(config_.results_dir / "sessions");
  auto log = std::make_unique<session::EventLogWriter>(
      NewLogPath(pid), session::LogHeader{pid, playlist_->Hash()});
  active_.emplace(Active{std::move(live), std::move(log), conn, std::nullopt});
  last_snapshot_.reset();
  return Publish(std::nullopt, true);
}

std::vector<json> SessionService::Event(ConnectionId conn, const json& m) {
  if (!active_ || active_->owner != conn) {
    return {ErrorMessage(ErrorCode::kInvalidArgument,
                         "no session on this connection; send hello first")};
  }
  const session::SessionEvent event = session::EventFromJson(m.at("event"));
  const PlaybackSnapshot before = SnapshotOf(active_->live.state());
  active_->live.Submit(event);
  active_->log->Append(event);
  std::vector<json> out = Publish(before, false);

  const session::SessionState& state = active_->live.state();
  if (state.phase == session::Phase::kDone) {
    const std::vector<TrialResult> results = session::Finalize(state);
    std::filesystem::create_directories(config_.results_dir);
    analysis::AppendResultsCsv(results_csv(), results);
    ++completed_;
    active_.reset();
    last_snapshot_.reset();
  }
  return out;
}

std::vector<json> SessionService::Publish(
    const std::optional<PlaybackSnapshot>& before, bool force_audio) {
  const session::SessionState& state = active_->live.state();
  const PlaybackSnapshot snap = SnapshotOf(state);
  if (sink_ && state.phase != session::Phase::kDone) {
    SyncSink(*sink_, last_snapshot_, snap);
  } else if (sink_) {
    sink_->Pause();
  }
  last_snapshot_ = snap;
  playback_.Publish(snap);

  std::vector<json> out;
  const bool changed = !before || before->version != snap.version;
  if (state.phase != session::Phase::kDone && (force_audio || changed)) {
    out.push_back(json{{"type", "audio"},
                       {"item_id", snap.version.item_id},
                       {"offset", snap.version.offset},
                       {"url", VersionUrl(snap.version)},
                       {"position_ms", snap.position_ms},
                       {"paused", snap.paused}});
  }
  out.push_back(json{{"type", "view"},
                     {"view", ViewToJson(session::CurrentTrialView(state))}});
  return out;
}

void SessionService::OnDisconnect(ConnectionId conn, SteadyTime now) {
  std::lock_guard lock(mu_);
  if (!active_ || active_->owner != conn) return;
  active_->owner.reset();
  active_->dropped_at = now;
  const session::SessionState& state = active_->live.state();
  if (!state.paused) {
    const session::SessionEvent pause{state.clock_ms, session::PauseToggle{}};
    active_->live.Submit(pause);
    active_->log->Append(pause);
    const PlaybackSnapshot snap = SnapshotOf(active_->live.state());
    if (sink_) SyncSink(*sink_, last_snapshot_, snap);
    last_snapshot_ = snap;
    playback_.Publish(snap);
  }
}

void SessionService::Tick(SteadyTime now) {
  std::lock_guard lock(mu_);
  Expire(now);
}

void SessionService::Expire(SteadyTime now) {
  if (active_ && active_->dropped_at &&
      now - *active_->dropped_at >= config_.reconnect_grace) {
    ++abandoned_;
    active_.reset();
    last_snapshot_.reset();
  }
}

bool SessionService::has_active_session() const {
  std::lock_guard lock(mu_);
  return active_.has_value();
}

std::optional<std::string> SessionService::active_pid() const {
  std::lock_guard lock(mu_);
  if (!active_) return std::nullopt;
  return active_->live.state().participant_id;
}

std::size_t SessionService::completed_sessions() const {
  std::lock_guard lock(mu_);
  return completed_;
}

std::size_t SessionService::abandoned_sessions() const {
  std::lock_guard lock(mu_);
  return abandoned_;
}

std::filesystem::path SessionService::results_csv() const {
  return config_.results_dir / "results.csv";
}

std::filesystem::path SessionService::NewLogPath(const std::string& pid) const {
  const std::time_t t = std::chrono::system_clock::to_time_t(wall_clock_());
  const std::string stem =
      fmt::format("{}-{:%Y%m%dT%H%M%SZ}", FileSafe(pid), fmt::gmtime(t));
  const std::filesystem::path dir = config_.results_dir / "sessions";
  std::filesystem::path path = dir / (stem + ".jsonl");
  for (int n = 2; std::filesystem::exists(path); ++n) {
    path = dir / fmt::format("{}-{}.jsonl", stem, n);
  }
  return path;
}

}  // namespace adjustsat::harness
