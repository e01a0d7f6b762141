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

#include "support/study.h"

#include <cctype>
#include <fstream>

#include <nlohmann/json.hpp>

#include "adjustsat/loudness.h"
#include "adjustsat/wav.h"
#include "support/signals.h"

namespace adjustsat::testing {

namespace {

using stimulus::DeMethod;
using stimulus::ProdType;

double DefaultFor(const std::string& label) {
  for (const auto& [l, ld] : PublishedDefaultLds()) {
    if (l == label) return ld;
  }
  return kTrainingDefaultLd;
}

StudyItem Item(std::string label, DeMethod m, ProdType p,
               std::vector<std::string> tags) {
  std::string id = label + (m == DeMethod::kOo ? "_oo" : "_ds");
  for (char& c : id) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  const double ld = DefaultFor(label);
  return StudyItem{std::move(id), std::move(label), m, p, std::move(tags), ld};
}

}  // namespace

std::vector<std::pair<std::string, double>> PublishedDefaultLds() {
  return {{"WDR1", 11.0}, {"WDR2", 8.2}, {"WDR3", 12.1}, {"WDR4", 13.0},
          {"WDR5", 11.7}, {"AR1", 4.0},  {"AR2", 1.0},   {"AR3", 6.0}};
}

std::vector<StudyItem> PresentationOrder() {
  const auto O = DeMethod::kOo;
  const auto D = DeMethod::kDs;
  const auto W = ProdType::kWdr;
  const auto A = ProdType::kAr;
  std::vector<StudyItem> items = {
      Item("Training", O, W, {"mVO", "noise"}),
      Item("WDR3", O, W, {"mVO", "music"}),
      Item("AR2", O, A, {"mVO", "noise"}),
      Item("WDR1", D, W, {"mVO", "noise"}),
      Item("WDR4", O, W, {"mVO", "music"}),
      Item("AR3", O, A, {"mVO", "noise"}),
      Item("AR2", D, A, {"mVO", "noise"}),
      Item("WDR2", D, W, {"mVO", "music"}),
      Item("WDR3", D, W, {"mVO", "music"}),
      Item("WDR5", O, W, {"fVO", "mVO", "music"}),
      Item("AR1", D, A, {"fVO", "noise"}),
      Item("WDR4", D, W, {"mVO", "music"}),
      Item("WDR5", D, W, {"fVO", "mVO", "music"}),
      Item("WDR2", O, W, {"mVO", "music"}),
      Item("AR1", O, A, {"fVO", "noise"}),
      Item("WDR1", O, W, {"mVO", "noise"}),
      Item("AR3", D, A, {"mVO", "noise"}),
  };
  items[0].id = "training";
  return items;
}

std::filesystem::path WriteStudy(const std::filesystem::path& dir,
                                 const StudyOptions& o) {
  namespace fs = std::filesystem;
  fs::create_directories(dir / "stems");
  // LD of equal-level stems at this rate, so the background level can be
  // set to hit each default LD exactly.
  const double ld0 = stimulus::ComputeLd(stimulus::MakeStemPair(
      Tone(o.sample_rate, o.seconds, 997.0, -23.0, o.channels),
      Tone(o.sample_rate, o.seconds, 330.0, -23.0, o.channels)));

  nlohmann::json items = nlohmann::json::array();
  nlohmann::json playlist = nlohmann::json::array();
  for (const StudyItem& it : PresentationOrder()) {
    const std::string stem = it.label;
    const fs::path fg = dir / "stems" / (stem + "_fg.wav");
    const fs::path bg = dir / "stems" / (stem + "_bg.wav");
    if (!fs::exists(fg)) {
      WriteWav(fg, Tone(o.sample_rate, o.seconds, 997.0, -23.0, o.channels));
      WriteWav(bg, Tone(o.sample_rate, o.seconds, 330.0,
                        -23.0 - (it.default_ld - ld0), o.channels));
    }
    nlohmann::json j{
        {"id", it.id},
        {"label", it.label},
        {"de_method", stimulus::DeMethodName(it.de_method)},
        {"prod_type", stimulus::ProdTypeName(it.prod_type)},
        {"content_tags", it.content_tags},
        {"fg", "stems/" + stem + "_fg.wav"},
        {"bg", "stems/" + stem + "_bg.wav"},
        {"grid", it.prod_type == stimulus::ProdType::kWdr ? kWdrGrid : kArGrid},
        {"default_ld", it.default_ld},
    };
    if (it.de_method == stimulus::DeMethod::kDs) {
      j["leakage"] = o.leakage_db ? nlohmann::json(*o.leakage_db) : nlohmann::json();
    }
    items.push_back(std::move(j));
    nlohmann::json ref{{"item", it.id}};
    if (it.id == "training") ref["training"] = true;
    playlist.push_back(std::move(ref));
  }
  const nlohmann::json manifest{{"target_loudness", -23.0},
                                {"output_dir", "cache"},
                                {"items", std::move(items)},
                                {"playlist", std::move(playlist)}};
  const fs::path path = dir / "manifest.json";
  std::ofstream(path) << manifest.dump(2) << "\n";
  return path;
}

std::vector<session::SessionEvent> ScriptedSession(const session::Playlist& playlist,
                                                   std::uint32_t variant) {
  using namespace session;
  std::vector<SessionEvent> events;
  std::int64_t t = 0;
  auto add = [&](EventKind kind) {
    t += 250;
    events.push_back(SessionEvent{t, std::move(kind)});
  };
  add(VolumeSet{0.8});
  for (std::size_t i = 0; i < playlist.size(); ++i) {
    const int turn = static_cast<int>((i * 7 + variant * 3) % 19) + 2;
    add(KnobDelta{turn});
    add(SelectVersion{Version::kA});
    add(SelectVersion{Version::kB});
    add(KnobDelta{-static_cast<int>(i % 3)});
    add(PauseToggle{});
    add(PauseToggle{});
    add(PressKnob{});
    // Ratings spread over the upper half with one below neutral.
    const int rating = (i == 5) ? -3 : static_cast<int>((i * 5 + variant) % 16);
    add(KnobDelta{rating});
    add(SelectVersion{Version::kA});
    add(PressKnob{});
  }
  return events;
}

std::vector<session::SessionEvent> FuzzedSession(
    const std::shared_ptr<const session::Playlist>& playlist, std::mt19937& rng) {
  using namespace session;
  std::vector<SessionEvent> events;
  std::int64_t t = 0;
  std::uniform_int_distribution<int> dt(0, 900);
  std::uniform_int_distribution<int> kind(0, 9);
  std::uniform_int_distribution<int> detents(-12, 12);
  events.push_back({t, VolumeSet{0.5}});
  SessionState s = StartSession("F", playlist, AllVersionsPresent{});
  s = HandleEvent(s, events.back());
  while (s.phase != Phase::kDone) {
    t += dt(rng);
    EventKind k;
    switch (kind(rng)) {
      case 0:
      case 1:
        k = PressKnob{};
        break;
      case 2:
        k = SelectVersion{Version::kA};
        break;
      case 3:
        k = SelectVersion{Version::kB};
        break;
      case 4:
        k = PauseToggle{};
        break;
      default:
        k = KnobDelta{detents(rng)};
    }
    events.push_back({t, k});
    s = HandleEvent(s, events.back());
  }
  return events;
}

std::shared_ptr<const session::Playlist> PresentationPlaylist(
    std::int64_t duration_ms) {
  std::vector<session::PlaylistEntry> entries;
  for (const StudyItem& it : PresentationOrder()) {
    stimulus::ItemSpec spec;
    spec.id = it.id;
    spec.label = it.label;
    spec.de_method = it.de_method;
    spec.prod_type = it.prod_type;
    spec.grid = stimulus::ParseGrid(it.prod_type == stimulus::ProdType::kWdr
                                        ? kWdrGrid
                                        : kArGrid);
    spec.default_ld = it.default_ld;
    entries.push_back(session::PlaylistEntry{spec, it.default_ld, duration_ms});
  }
  return session::Playlist::Create(std::move(entries));
}

}  // namespace adjustsat::testing
