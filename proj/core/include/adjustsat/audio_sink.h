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

#ifndef ADJUSTSAT_AUDIO_SINK_H_
#define ADJUSTSAT_AUDIO_SINK_H_

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>

#include "adjustsat/session.h"

namespace adjustsat::harness {

// Abstract playback device. Positions are milliseconds into the version.
class AudioSink {
 public:
  virtual ~AudioSink() = default;
  virtual void Play(const session::VersionId& version, std::int64_t from_ms) = 0;
  virtual void Pause() = 0;
  virtual void Resume() = 0;
  virtual std::int64_t Position() const = 0;
};

// What the sink should be doing after a transition.
struct PlaybackSnapshot {
  session::VersionId version;
  std::int64_t position_ms = 0;
  bool paused = false;

  friend bool operator==(const PlaybackSnapshot&,
                         const PlaybackSnapshot&) = default;
};

PlaybackSnapshot SnapshotOf(const session::SessionState& state);

// Single-slot mailbox: the session thread publishes, the audio side reads
// whole snapshots and never sees a half-written one.
class SnapshotChannel {
 public:
  void Publish(PlaybackSnapshot snapshot);
  std::shared_ptr<const PlaybackSnapshot> Latest() const;

 private:
  mutable std::mutex mu_;
  std::shared_ptr<const PlaybackSnapshot> latest_;
};

// Drives `sink` from `previous` to `next`: a version or item change restarts
// playback at the snapshot position, a pause flip pauses or resumes.
void SyncSink(AudioSink& sink, const std::optional<PlaybackSnapshot>& previous,
              const PlaybackSnapshot& next);

// Sink without audio output. Time only moves through Advance, so tests can
// check positions exactly.
class HeadlessSink : public AudioSink {
 public:
  void Play(const session::VersionId& version, std::int64_t from_ms) override;
  void Pause() override;
  void Resume() override;
  std::int64_t Position() const override;

  void Advance(std::int64_t ms);
  std::optional<session::VersionId> version() const;
  bool paused() const;
  std::size_t play_count() const;

 private:
  mutable std::mutex mu_;
  std::optional<session::VersionId> version_;
  std::int64_t position_ms_ = 0;
  bool paused_ = false;
  std::size_t play_count_ = 0;
};

}  // namespace adjustsat::harness

#endif  // ADJUSTSAT_AUDIO_SINK_H_
