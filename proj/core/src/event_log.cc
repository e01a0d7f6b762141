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

#include "adjustsat/event_log.h"

#include <fmt/format.h>

#include "adjustsat/error.h"
#include "overloaded.h"

namespace adjustsat::session {

using nlohmann::json;

namespace {

json HeaderToJson(const LogHeader& h) {
  return json{{"type", "header"},
              {"pid", h.pid},
              {"playlist_hash", h.playlist_hash},
              {"toolkit_version", h.toolkit_version}};
}

LogHeader HeaderFromJson(const json& j) {
  if (j.value("type", "") != "header") {
    throw Error(ErrorCode::kMalformedLog, "first line is not a log header");
  }
  return LogHeader{j.at("pid").get<std::string>(),
                   j.at("playlist_hash").get<std::string>(),
                   j.at("toolkit_version").get<std::string>()};
}

}  // namespace

json EventToJson(const SessionEvent& event) {
  json j{{"t", event.timestamp_ms}, {"kind", EventKindName(event.kind)}};
  std::visit(Overloaded{
                 [&](const VolumeSet& e) { j["level"] = e.level; },
                 [&](const KnobDelta& e) { j["detents"] = e.detents; },
                 [&](const PressKnob&) {},
                 [&](const SelectVersion& e) {
                   j["version"] = e.version == Version::kA ? "A" : "B";
                 },
                 [&](const PauseToggle&) {},
             },
             event.kind);
  return j;
}

SessionEvent EventFromJson(const json& j) {
  try {
    SessionEvent e;
    e.timestamp_ms = j.at("t").get<std::int64_t>();
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "VolumeSet") {
      e.kind = VolumeSet{j.at("level").get<double>()};
    } else if (kind == "KnobDelta") {
      e.kind = KnobDelta{j.at("detents").get<int>()};
    } else if (kind == "PressKnob") {
      e.kind = PressKnob{};
    } else if (kind == "SelectVersion") {
      const std::string v = j.at("version").get<std::string>();
      if (v != "A" && v != "B") {
        throw Error(ErrorCode::kMalformedLog, "version must be A or B");
      }
      e.kind = SelectVersion{v == "A" ? Version::kA : Version::kB};
    } else if (kind == "PauseToggle") {
      e.kind = PauseToggle{};
    } else {
      throw Error(ErrorCode::kMalformedLog, "unknown event kind '" + kind + "'");
    }
    return e;
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::kMalformedLog, ex.what());
  }
}

std::string EncodeEventLog(const EventLog& log) {
  std::string out = HeaderToJson(log.header).dump() + "\n";
  for (const SessionEvent& e : log.events) out += EventToJson(e).dump() + "\n";
  return out;
}

EventLog DecodeEventLog(std::istream& in) {
  EventLog log;
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    const bool complete = !in.eof();
    if (line.empty()) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception&) {
      if (!complete) {
        log.truncated_tail = true;
        break;
      }
      throw Error(ErrorCode::kMalformedLog,
                  fmt::format("line {} is not valid JSON", line_no));
    }
    try {
      if (!have_header) {
        log.header = HeaderFromJson(j);
        have_header = true;
      } else {
        log.events.push_back(EventFromJson(j));
      }
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kMalformedLog,
                  fmt::format("line {}: {}", line_no, e.what()));
    } catch (const Error& e) {
      throw Error(ErrorCode::kMalformedLog,
                  fmt::format("line {}: {}", line_no, e.what()));
    }
  }
  if (!have_header) throw Error(ErrorCode::kMalformedLog, "log has no header");
  return log;
}

EventLog ReadEventLog(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kUnreadableFile, "cannot open " + path.string());
  return DecodeEventLog(in);
}

EventLogWriter::EventLogWriter(const std::filesystem::path& path,
                               const LogHeader& header)
    : path_(path), out_(path, std::ios::out | std::ios::trunc) {
  if (!out_) throw Error(ErrorCode::kIo, "cannot create " + path.string());
  out_ << HeaderToJson(header).dump() << '\n' << std::flush;
}

void EventLogWriter::Append(const SessionEvent& event) {
  out_ << EventToJson(event).dump() << '\n' << std::flush;
  if (!out_) throw Error(ErrorCode::kIo, "write to " + path_.string() + " failed");
}

}  // namespace adjustsat::session
