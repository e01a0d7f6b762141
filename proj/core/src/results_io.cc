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

#include "adjustsat/results_io.h"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "adjustsat/csv.h"
#include "adjustsat/error.h"

namespace adjustsat::analysis {

namespace {

std::vector<std::string> SplitHeader(std::string_view header) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = header.find(',', start);
    out.emplace_back(header.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

// Parses `text`, checks the header and field counts, and returns data rows.
std::vector<csv::Row> DataRows(std::string_view text, std::string_view header,
                               std::string_view what) {
  std::vector<csv::Row> rows = csv::Parse(text);
  const std::vector<std::string> expected = SplitHeader(header);
  if (rows.empty() || rows.front().fields != expected) {
    throw Error(ErrorCode::kMalformedInput,
                fmt::format("line 1: {} header must be '{}'", what, header));
  }
  rows.erase(rows.begin());
  for (const csv::Row& r : rows) {
    if (r.fields.size() != expected.size()) {
      throw Error(ErrorCode::kMalformedInput,
                  fmt::format("line {}: expected {} fields, found {}", r.line,
                              expected.size(), r.fields.size()));
    }
  }
  return rows;
}

template <class F>
auto AtLine(std::size_t line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kMalformedInput) throw;
    throw Error(ErrorCode::kMalformedInput,
                fmt::format("line {}: {}", line, e.what()));
  }
}

std::string Lu(double v) {
  std::string s = fmt::format("{:.2f}", v);
  if (s == "-0.00") s = "0.00";
  return s;
}

}  // namespace

std::string FormatResultRow(const TrialResult& r) {
  const std::string fields[] = {
      r.participant_id,
      std::to_string(r.item_number),
      r.item_label,
      std::string(stimulus::DeMethodName(r.de_method)),
      std::string(stimulus::ProdTypeName(r.prod_type)),
      Lu(r.chosen_offset),
      Lu(r.chosen_ld),
      std::to_string(r.satisfaction_value),
      std::string(session::EnglishLabel(r.satisfaction_label)),
      r.valid ? "true" : "false",
  };
  return csv::FormatRow(fields);
}

std::string EncodeResultsCsv(std::span<const TrialResult> results) {
  std::string out = std::string(kResultsCsvHeader) + "\n";
  for (const TrialResult& r : results) out += FormatResultRow(r);
  return out;
}

std::vector<TrialResult> ParseResultsCsv(std::string_view text) {
  std::vector<TrialResult> out;
  for (const csv::Row& row : DataRows(text, kResultsCsvHeader, "results")) {
    out.push_back(AtLine(row.line, [&] {
      const auto& f = row.fields;
      TrialResult r;
      r.participant_id = f[0];
      if (r.participant_id.empty()) {
        throw Error(ErrorCode::kMalformedInput, "empty pid");
      }
      const long long item = csv::ParseInt(f[1], "item_number");
      if (item < 0) throw Error(ErrorCode::kMalformedInput, "negative item_number");
      r.item_number = static_cast<std::size_t>(item);
      r.item_label = f[2];
      try {
        r.de_method = stimulus::ParseDeMethod(f[3]);
        r.prod_type = stimulus::ParseProdType(f[4]);
      } catch (const Error& e) {
        throw Error(ErrorCode::kMalformedInput, e.what());
      }
      r.chosen_offset = csv::ParseDouble(f[5], "chosen_offset_lu");
      r.chosen_ld = csv::ParseDouble(f[6], "chosen_ld_lu");
      const long long sat = csv::ParseInt(f[7], "satisfaction_value");
      if (sat < session::kSatisfactionMin || sat > session::kSatisfactionMax) {
        throw Error(ErrorCode::kMalformedInput,
                    fmt::format("satisfaction_value {} outside 0..30", sat));
      }
      r.satisfaction_value = static_cast<int>(sat);
      r.satisfaction_label = session::ParseSatisfactionLabel(f[8]);
      if (f[9] == "true") {
        r.valid = true;
      } else if (f[9] == "false") {
        r.valid = false;
      } else {
        throw Error(ErrorCode::kMalformedInput,
                    "valid must be true or false, got '" + f[9] + "'");
      }
      return r;
    }));
  }
  return out;
}

std::vector<TrialResult> ReadResultsCsv(const std::filesystem::path& path) {
  return ParseResultsCsv(ReadTextFile(path));
}

void AppendResultsCsv(const std::filesystem::path& path,
                      std::span<const TrialResult> results) {
  std::error_code ec;
  const bool fresh = !std::filesystem::exists(path, ec) ||
                     std::filesystem::file_size(path, ec) == 0;
  std::ofstream out(path, std::ios::out | std::ios::app | std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  if (fresh) out << kResultsCsvHeader << '\n';
  for (const TrialResult& r : results) out << FormatResultRow(r);
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "write to " + path.string() + " failed");
}

std::vector<Audiogram> ParseAudiogramCsv(std::string_view text) {
  std::vector<Audiogram> out;
  for (const csv::Row& row : DataRows(text, kAudiogramCsvHeader, "audiogram")) {
    AtLine(row.line, [&] {
      const auto& f = row.fields;
      if (f[0].empty()) throw Error(ErrorCode::kMalformedInput, "empty pid");
      if (out.empty() || out.back().participant_id != f[0]) {
        for (const Audiogram& a : out) {
          if (a.participant_id == f[0]) {
            throw Error(ErrorCode::kMalformedInput,
                        "rows of pid " + f[0] + " are not contiguous");
          }
        }
        out.push_back(Audiogram{f[0], {}, {}, {}});
      }
      Audiogram& a = out.back();
      a.frequencies_hz.push_back(csv::ParseDouble(f[1], "frequency_hz"));
      a.left_dbhl.push_back(csv::ParseDouble(f[2], "left_dbhl"));
      a.right_dbhl.push_back(csv::ParseDouble(f[3], "right_dbhl"));
      ValidateAudiogram(a);
    });
  }
  return out;
}

std::vector<Audiogram> ReadAudiogramCsv(const std::filesystem::path& path) {
  return ParseAudiogramCsv(ReadTextFile(path));
}

std::string EncodeAudiogramCsv(std::span<const Audiogram> audiograms) {
  std::string out = std::string(kAudiogramCsvHeader) + "\n";
  for (const Audiogram& a : audiograms) {
    for (std::size_t i = 0; i < a.frequencies_hz.size(); ++i) {
      const std::string fields[] = {a.participant_id,
                                    fmt::format("{}", a.frequencies_hz[i]),
                                    fmt::format("{}", a.left_dbhl[i]),
                                    fmt::format("{}", a.right_dbhl[i])};
      out += csv::FormatRow(fields);
    }
  }
  return out;
}

std::vector<QuestionnaireResponse> ParseQuestionnaireCsv(std::string_view text) {
  std::vector<QuestionnaireResponse> out;
  for (const csv::Row& row :
       DataRows(text, kQuestionnaireCsvHeader, "questionnaire")) {
    out.push_back(AtLine(row.line, [&] {
      const auto& f = row.fields;
      if (f[0].empty()) throw Error(ErrorCode::kMalformedInput, "empty pid");
      QuestionnaireResponse r;
      r.participant_id = f[0];
      r.q0 = ParseHearingSelfAssessment(f[1]);
      for (std::size_t i = 0; i < 4; ++i) r.q1_to_q4[i] = f[2 + i];
      r.q5 = ParseTvSpeechProblems(f[6]);
      r.q6 = f[7];
      return r;
    }));
  }
  return out;
}

std::vector<QuestionnaireResponse> ReadQuestionnaireCsv(
    const std::filesystem::path& path) {
  return ParseQuestionnaireCsv(ReadTextFile(path));
}

std::string EncodeQuestionnaireCsv(
    std::span<const QuestionnaireResponse> responses) {
  std::string out = std::string(kQuestionnaireCsvHeader) + "\n";
  for (const QuestionnaireResponse& r : responses) {
    const std::string fields[] = {
        r.participant_id,       std::string(OptionText(r.q0)),
        r.q1_to_q4[0],          r.q1_to_q4[1],
        r.q1_to_q4[2],          r.q1_to_q4[3],
        std::string(OptionText(r.q5)), r.q6};
    out += csv::FormatRow(fields);
  }
  return out;
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kUnreadableFile, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteTextFileAtomic(const std::filesystem::path& path,
                         std::string_view text) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::out | std::ios::trunc | std::ios::binary);
    if (!out) throw Error(ErrorCode::kIo, "cannot create " + tmp.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out) throw Error(ErrorCode::kIo, "write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    throw Error(ErrorCode::kIo,
                "cannot rename " + tmp.string() + ": " + ec.message());
  }
}

}  // namespace adjustsat::analysis
