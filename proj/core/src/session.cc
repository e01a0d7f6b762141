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

#include "adjustsat/session.h"

#include <algorithm>
#include <fmt/format.h>

#include "adjustsat/error.h"
#include "adjustsat/fingerprint.h"
#include "overloaded.h"

namespace adjustsat::session {

namespace {

bool InAdjustment(Phase phase) {
  return phase == Phase::kTraining || phase == Phase::kAdjust;
}

TrialResult MakeResult(const SessionState& s) {
  const PlaylistEntry& e = s.entry();
  TrialResult r;
  r.participant_id = s.participant_id;
  r.item_number = s.item_index;
  r.item_id = e.item.id;
  r.item_label = e.item.label;
  r.de_method = e.item.de_method;
  r.prod_type = e.item.prod_type;
  r.chosen_offset = s.personalized_offset();
  r.chosen_ld = e.default_ld - r.chosen_offset;
  r.satisfaction_value = s.satisfaction;
  r.satisfaction_label = LabelFor(s.satisfaction);
  r.valid = s.satisfaction >= kSatisfactionNeutral;
  return r;
}

void EnterItem(SessionState& s, std::size_t index) {
  s.item_index = index;
  s.phase = index == 0 ? Phase::kTraining : Phase::kAdjust;
  s.offset_index = s.entry().item.grid.default_index();
  s.ab_selection = Version::kA;
  s.satisfaction = kSatisfactionNeutral;
  s.playhead_ms = 0;
}

}  // namespace

std::shared_ptr<const Playlist> Playlist::Create(
    std::vector<PlaylistEntry> entries) {
  if (entries.empty()) {
    throw Error(ErrorCode::kEmptyPlaylist, "playlist has no entries");
  }
  for (const PlaylistEntry& e : entries) {
    if (e.item.grid.offsets().empty()) {
      throw Error(ErrorCode::kInvalidPlaylist,
                  "item " + e.item.id + " has no grid");
    }
  }
  return std::shared_ptr<const Playlist>(new Playlist(std::move(entries)));
}

std::string Playlist::Hash() const {
  Fingerprint fp;
  for (const PlaylistEntry& e : entries_) {
    fp.Add(e.item.id).Add("|").Add(stimulus::FormatGrid(e.item.grid)).Add("|");
    fp.Add(fmt::format("{}", e.default_ld)).Add("\n");
  }
  return fp.hex();
}

std::string_view EventKindName(const EventKind& kind) {
  return std::visit(
      Overloaded{[](const VolumeSet&) { return "VolumeSet"; },
                 [](const KnobDelta&) { return "KnobDelta"; },
                 [](const PressKnob&) { return "PressKnob"; },
                 [](const SelectVersion&) { return "SelectVersion"; },
                 [](const PauseToggle&) { return "PauseToggle"; }},
      kind);
}

std::string_view PhaseName(Phase phase) {
  switch (phase) {
    case Phase::kTraining: return "Training";
    case Phase::kAdjust: return "Adjust";
    case Phase::kAssess: return "Assess";
    case Phase::kDone: return "Done";
  }
  return "";
}

double SessionState::personalized_offset() const {
  return entry().item.grid.offsets().at(offset_index);
}

VersionId SessionState::active_version() const {
  const PlaylistEntry& e = entry();
  return VersionId{e.item.id,
                   ab_selection == Version::kA ? 0.0 : personalized_offset()};
}

std::int64_t SessionState::position_ms() const {
  const std::int64_t duration = entry().duration_ms;
  return duration > 0 ? playhead_ms % duration : playhead_ms;
}

SessionState StartSession(std::string pid,
                          std::shared_ptr<const Playlist> playlist,
                          const stimulus::VersionLookup& versions) {
  if (pid.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "participant id is empty");
  }
  if (!playlist || playlist->size() == 0) {
    throw Error(ErrorCode::kEmptyPlaylist, "playlist has no entries");
  }
  for (const PlaylistEntry& e : playlist->entries()) {
    if (!versions.HasCompleteSet(e.item)) {
      throw Error(ErrorCode::kMissingVersions,
                  "no complete version set for item " + e.item.id);
    }
  }
  SessionState s;
  s.participant_id = std::move(pid);
  s.playlist = std::move(playlist);
  EnterItem(s, 0);
  return s;
}

Transition Apply(const SessionState& state, const SessionEvent& event) {
  if (state.phase == Phase::kDone) {
    throw Error(ErrorCode::kSessionFinished,
                fmt::format("{} after the session finished",
                            EventKindName(event.kind)));
  }
  if (event.timestamp_ms < state.clock_ms) {
    throw Error(ErrorCode::kOutOfOrder,
                fmt::format("event at {} ms precedes the previous one at {} ms",
                            event.timestamp_ms, state.clock_ms));
  }
  if (std::holds_alternative<VolumeSet>(event.kind) && state.volume_locked) {
    throw Error(ErrorCode::kVolumeChangeLocked,
                "the volume is fixed for the rest of the session");
  }

  Transition t{state, Disposition::kApplied, std::nullopt};
  SessionState& s = t.state;
  if (!s.paused) s.playhead_ms += event.timestamp_ms - s.clock_ms;
  s.clock_ms = event.timestamp_ms;

  std::visit(
      Overloaded{
          [&](const VolumeSet& e) {
            s.volume = e.level;
            s.volume_locked = true;
          },
          [&](const KnobDelta& e) {
            s.volume_locked = true;
            if (e.detents == 0) {
              t.disposition = Disposition::kIgnored;
              return;
            }
            if (InAdjustment(s.phase)) {
              const auto last =
                  static_cast<std::int64_t>(s.entry().item.grid.size()) - 1;
              const std::int64_t next = std::clamp<std::int64_t>(
                  static_cast<std::int64_t>(s.offset_index) + e.detents, 0,
                  last);
              s.offset_index = static_cast<std::size_t>(next);
              s.ab_selection = Version::kB;
            } else {
              s.satisfaction = static_cast<int>(std::clamp<std::int64_t>(
                  static_cast<std::int64_t>(s.satisfaction) + e.detents,
                  kSatisfactionMin, kSatisfactionMax));
            }
          },
          [&](const PressKnob&) {
            if (InAdjustment(s.phase)) {
              s.phase = Phase::kAssess;
              s.satisfaction = kSatisfactionNeutral;
              return;
            }
            if (!s.playlist->IsTraining(s.item_index)) {
              TrialResult r = MakeResult(s);
              s.results.push_back(r);
              t.emitted = std::move(r);
            }
            if (s.item_index + 1 < s.playlist->size()) {
              EnterItem(s, s.item_index + 1);
            } else {
              s.phase = Phase::kDone;
            }
          },
          [&](const SelectVersion& e) {
            if (s.ab_selection == e.version) {
              t.disposition = Disposition::kIgnored;
              return;
            }
            s.ab_selection = e.version;
          },
          [&](const PauseToggle&) { s.paused = !s.paused; },
      },
      event.kind);
  return t;
}

SessionState HandleEvent(const SessionState& state, const SessionEvent& event) {
  return Apply(state, event).state;
}

TrialView CurrentTrialView(const SessionState& state) {
  TrialView v;
  v.phase = state.phase;
  v.item_count = state.playlist ? state.playlist->scored_count() : 0;
  v.paused = state.paused;
  if (state.phase == Phase::kDone) {
    v.item_number = v.item_count;
    v.counter = fmt::format("{} / {}", v.item_number, v.item_count);
    v.message = std::string(kCompletionMessage);
    return v;
  }
  v.item_number = state.item_index;
  v.counter = fmt::format("{} / {}", v.item_number, v.item_count);
  v.active = state.ab_selection;
  if (state.phase == Phase::kAssess) {
    v.satisfaction_label = LabelFor(state.satisfaction);
    v.satisfaction_position = state.satisfaction;
  } else {
    const std::size_t n = state.entry().item.grid.size();
    v.knob_fraction =
        n > 1 ? static_cast<double>(state.offset_index) / (n - 1) : 0.0;
  }
  return v;
}

std::vector<TrialResult> Finalize(const SessionState& state) {
  if (state.phase != Phase::kDone) {
    throw Error(ErrorCode::kSessionIncomplete,
                fmt::format("session is in {} at item {}",
                            PhaseName(state.phase), state.item_index));
  }
  return state.results;
}

SessionState Recover(const std::vector<SessionEvent>& log, std::string pid,
                     std::shared_ptr<const Playlist> playlist) {
  struct AllPresent : stimulus::VersionLookup {
    bool HasCompleteSet(const stimulus::ItemSpec&) const override { return true; }
  } all_present;
  SessionState s = StartSession(std::move(pid), std::move(playlist), all_present);
  for (std::size_t i = 0; i < log.size(); ++i) {
    try {
      s = Apply(s, log[i]).state;
    } catch (const Error& e) {
      throw Error(ErrorCode::kIllegalTransition,
                  fmt::format("log event {} ({}): {}", i,
                              EventKindName(log[i].kind), e.what()));
    }
  }
  return s;
}

std::vector<TrialResult> Replay(const std::vector<SessionEvent>& log,
                                std::string pid,
                                std::shared_ptr<const Playlist> playlist) {
  const SessionState s = Recover(log, std::move(pid), std::move(playlist));
  if (s.phase != Phase::kDone) {
    throw Error(ErrorCode::kIncompleteLog,
                fmt::format("log ends in {} at item {} with {} confirmed trials",
                            PhaseName(s.phase), s.item_index, s.results.size()));
  }
  return Finalize(s);
}

LiveSession::LiveSession(std::string pid,
                         std::shared_ptr<const Playlist> playlist,
                         const stimulus::VersionLookup& versions)
    : state_(StartSession(std::move(pid), std::move(playlist), versions)) {}

Transition LiveSession::Submit(const SessionEvent& event) {
  Transition t = Apply(state_, event);
  log_.push_back(event);
  state_ = t.state;
  return t;
}

}  // namespace adjustsat::session
