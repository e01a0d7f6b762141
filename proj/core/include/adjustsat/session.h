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

#ifndef ADJUSTSAT_SESSION_H_
#define ADJUSTSAT_SESSION_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "adjustsat/satisfaction.h"
#include "adjustsat/stimulus.h"
#include "adjustsat/trial_result.h"
#include "adjustsat/version_cache.h"

namespace adjustsat::session {

struct PlaylistEntry {
  stimulus::ItemSpec item;
  double default_ld = 0.0;
  // Length of the item audio; 0 disables looping of the playhead.
  std::int64_t duration_ms = 0;
};

// Fixed item order, identical for every participant. Entry 0 is the
// training item; its trial is run but never reported.
class Playlist {
 public:
  // Throws kEmptyPlaylist for no entries.
  static std::shared_ptr<const Playlist> Create(std::vector<PlaylistEntry> entries);

  const std::vector<PlaylistEntry>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  // Items that produce results (training excluded).
  std::size_t scored_count() const noexcept { return entries_.size() - 1; }
  bool IsTraining(std::size_t index) const noexcept { return index == 0; }

  // Stable digest of ids, grids, default LDs and order.
  std::string Hash() const;

 private:
  explicit Playlist(std::vector<PlaylistEntry> entries)
      : entries_(std::move(entries)) {}
  std::vector<PlaylistEntry> entries_;
};

enum class Version { kA, kB };  // A = default V_d, B = personalized V_p

struct VolumeSet {
  double level = 0.0;
  friend bool operator==(const VolumeSet&, const VolumeSet&) = default;
};
struct KnobDelta {
  int detents = 0;
  friend bool operator==(const KnobDelta&, const KnobDelta&) = default;
};
struct PressKnob {
  friend bool operator==(const PressKnob&, const PressKnob&) = default;
};
struct SelectVersion {
  Version version = Version::kA;
  friend bool operator==(const SelectVersion&, const SelectVersion&) = default;
};
struct PauseToggle {
  friend bool operator==(const PauseToggle&, const PauseToggle&) = default;
};

using EventKind =
    std::variant<VolumeSet, KnobDelta, PressKnob, SelectVersion, PauseToggle>;

struct SessionEvent {
  std::int64_t timestamp_ms = 0;  // since session start
  EventKind kind;

  friend bool operator==(const SessionEvent&, const SessionEvent&) = default;
};

std::string_view EventKindName(const EventKind& kind);

enum class Phase { kTraining, kAdjust, kAssess, kDone };
std::string_view PhaseName(Phase phase);

struct VersionId {
  std::string item_id;
  double offset = 0.0;
  friend bool operator==(const VersionId&, const VersionId&) = default;
};

struct SessionState {
  std::string participant_id;
  std::shared_ptr<const Playlist> playlist;
  Phase phase = Phase::kTraining;
  std::size_t item_index = 0;
  std::size_t offset_index = 0;  // into the current item's grid
  Version ab_selection = Version::kA;
  int satisfaction = kSatisfactionNeutral;
  // Audio time elapsed in the current item, not wrapped at the item end.
  std::int64_t playhead_ms = 0;
  std::int64_t clock_ms = 0;  // timestamp of the last applied event
  bool paused = false;
  bool volume_locked = false;
  std::optional<double> volume;
  std::vector<TrialResult> results;

  const PlaylistEntry& entry() const { return playlist->entries().at(item_index); }
  double personalized_offset() const;
  // The version the participant currently hears.
  VersionId active_version() const;
  // Playhead wrapped into the item (items loop).
  std::int64_t position_ms() const;
};

// Starts in Training at item 0 with offset 0 and V_d selected.
// Errors: kInvalidArgument (empty pid), kEmptyPlaylist, kMissingVersions.
SessionState StartSession(std::string pid,
                          std::shared_ptr<const Playlist> playlist,
                          const stimulus::VersionLookup& versions);

enum class Disposition { kApplied, kIgnored };

struct Transition {
  SessionState state;
  Disposition disposition = Disposition::kApplied;
  std::optional<TrialResult> emitted;  // set on a confirmed scored trial
};

// Pure transition. Errors: kSessionFinished (state is Done), kOutOfOrder
// (timestamp before the previous event), kVolumeChangeLocked.
Transition Apply(const SessionState& state, const SessionEvent& event);
SessionState HandleEvent(const SessionState& state, const SessionEvent& event);

// What the participant's screen shows. Carries no LU values.
struct TrialView {
  Phase phase = Phase::kTraining;
  std::size_t item_number = 0;  // 0 during training
  std::size_t item_count = 0;   // training excluded
  std::string counter;          // "3 / 16"
  Version active = Version::kA;
  std::optional<SatisfactionLabel> satisfaction_label;
  std::optional<int> satisfaction_position;  // 0..30, Assess only
  std::optional<double> knob_fraction;       // 0..1 along the grid, Adjust only
  bool paused = false;
  std::string message;  // completion text when done

  friend bool operator==(const TrialView&, const TrialView&) = default;
};

inline constexpr std::string_view kCompletionMessage = "Vielen Dank!";

TrialView CurrentTrialView(const SessionState& state);

// One result per scored item in playlist order. Throws kSessionIncomplete
// unless the session is Done.
std::vector<TrialResult> Finalize(const SessionState& state);

// Folds a log through the machine from a fresh session. Throws
// kIllegalTransition when an event is rejected.
SessionState Recover(const std::vector<SessionEvent>& log, std::string pid,
                     std::shared_ptr<const Playlist> playlist);

// Recover, then Finalize. Throws kIncompleteLog when the log does not reach
// Done.
std::vector<TrialResult> Replay(const std::vector<SessionEvent>& log,
                                std::string pid,
                                std::shared_ptr<const Playlist> playlist);

// A session plus its append-only log of accepted events. Rejected events
// leave both untouched so the log always replays cleanly.
class LiveSession {
 public:
  LiveSession(std::string pid, std::shared_ptr<const Playlist> playlist,
              const stimulus::VersionLookup& versions);

  const SessionState& state() const noexcept { return state_; }
  const std::vector<SessionEvent>& log() const noexcept { return log_; }

  // Throws on rejection without changing anything.
  Transition Submit(const SessionEvent& event);

 private:
  SessionState state_;
  std::vector<SessionEvent> log_;
};

}  // namespace adjustsat::session

#endif  // ADJUSTSAT_SESSION_H_
