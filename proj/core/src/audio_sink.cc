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

#include "adjustsat/audio_sink.h"

namespace adjustsat::harness {

PlaybackSnapshot SnapshotOf(const session::SessionState& state) {
  if (state.phase == session::Phase::kDone) {
    return PlaybackSnapshot{{}, 0, true};
  }
  return PlaybackSnapshot{state.active_version(), state.position_ms(),
                          state.paused};
}

void SnapshotChannel::Publish(PlaybackSnapshot snapshot) {
  auto next = std::make_shared<const PlaybackSnapshot>(std::move(snapshot));
  std::lock_guard lock(mu_);
  latest_ = std::move(next);
}

std::shared_ptr<const PlaybackSnapshot> SnapshotChannel::Latest() const {
  std::lock_guard lock(mu_);
  return latest_;
}

void SyncSink(AudioSink& sink, const std::optional<PlaybackSnapshot>& previous,
              const PlaybackSnapshot& next) {
  if (!previous || previous->version != next.version) {
    sink.Play(next.version, next.position_ms);
    if (next.paused) sink.Pause();
    return;
  }
  if (previous->paused != next.paused) {
    if (next.paused) {
      sink.Pause();
    } else {
      sink.Resume();
    }
  }
}

void HeadlessSink::Play(const session::VersionId& version, std::int64_t from_ms) {
  std::lock_guard lock(mu_);
  version_ = version;
  position_ms_ = from_ms;
  paused_ = false;
  ++play_count_;
}

void HeadlessSink::Pause() {
  std::lock_guard lock(mu_);
  paused_ = true;
}

void HeadlessSink::Resume() {
  std::lock_guard lock(mu_);
  paused_ = false;
}

std::int64_t HeadlessSink::Position() const {
  std::lock_guard lock(mu_);
  return position_ms_;
}

void HeadlessSink::Advance(std::int64_t ms) {
  std::lock_guard lock(mu_);
  if (version_ && !paused_) position_ms_ += ms;
}

std::optional<session::VersionId> HeadlessSink::version() const {
  std::lock_guard lock(mu_);
  return version_;
}

bool HeadlessSink::paused() const {
  std::lock_guard lock(mu_);
  return paused_;
}

std::size_t HeadlessSink::play_count() const {
  std::lock_guard lock(mu_);
  return play_count_;
}

}  // namespace adjustsat::harness
