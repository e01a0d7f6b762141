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

#ifndef ADJUSTSAT_EVENT_LOG_H_
#define ADJUSTSAT_EVENT_LOG_H_

#include <filesystem>
#include <fstream>
#include <istream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "adjustsat/session.h"

namespace adjustsat::session {

inline constexpr std::string_view kToolkitVersion = "adjustsat 0.3.0";

struct LogHeader {
  std::string pid;
  std::string playlist_hash;
  std::string toolkit_version{kToolkitVersion};

  friend bool operator==(const LogHeader&, const LogHeader&) = default;
};

struct EventLog {
  LogHeader header;
  std::vector<SessionEvent> events;
  // The final line was cut off mid-write and dropped.
  bool truncated_tail = false;
};

// {"t": 1200, "kind": "KnobDelta", "detents": -2}
nlohmann::json EventToJson(const SessionEvent& event);
// Throws kMalformedLog.
SessionEvent EventFromJson(const nlohmann::json& j);

// One JSON object per line: a header line, then one line per event.
std::string EncodeEventLog(const EventLog& log);
// A partial last line (no newline, unparsable) is tolerated and flagged;
// anything else malformed throws kMalformedLog.
EventLog DecodeEventLog(std::istream& in);
EventLog ReadEventLog(const std::filesystem::path& path);

// Appends and flushes one line per event so a crash loses at most the event
// being written.
class EventLogWriter {
 public:
  EventLogWriter(const std::filesystem::path& path, const LogHeader& header);

  void Append(const SessionEvent& event);
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
  std::ofstream out_;
};

}  // namespace adjustsat::session

#endif  // ADJUSTSAT_EVENT_LOG_H_
