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

#ifndef ADJUSTSAT_RESULTS_IO_H_
#define ADJUSTSAT_RESULTS_IO_H_

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adjustsat/audiogram.h"
#include "adjustsat/questionnaire.h"
#include "adjustsat/trial_result.h"

namespace adjustsat::analysis {

inline constexpr std::string_view kResultsCsvHeader =
    "pid,item_number,item_label,de_method,prod_type,chosen_offset_lu,"
    "chosen_ld_lu,satisfaction_value,satisfaction_label,valid";
inline constexpr std::string_view kAudiogramCsvHeader =
    "pid,frequency_hz,left_dbhl,right_dbhl";
inline constexpr std::string_view kQuestionnaireCsvHeader =
    "pid,q0,q1,q2,q3,q4,q5,q6";

// LU values are written with two decimals; `valid` is true/false.
std::string FormatResultRow(const TrialResult& r);
std::string EncodeResultsCsv(std::span<const TrialResult> results);
// Errors (kMalformedInput) name the offending line. item_id is left empty.
std::vector<TrialResult> ParseResultsCsv(std::string_view text);
std::vector<TrialResult> ReadResultsCsv(const std::filesystem::path& path);
// Creates the file with its header when absent or empty.
void AppendResultsCsv(const std::filesystem::path& path,
                      std::span<const TrialResult> results);

// Rows of one pid must be contiguous; each becomes one Audiogram.
std::vector<Audiogram> ParseAudiogramCsv(std::string_view text);
std::vector<Audiogram> ReadAudiogramCsv(const std::filesystem::path& path);
std::string EncodeAudiogramCsv(std::span<const Audiogram> audiograms);

std::vector<QuestionnaireResponse> ParseQuestionnaireCsv(std::string_view text);
std::vector<QuestionnaireResponse> ReadQuestionnaireCsv(
    const std::filesystem::path& path);
std::string EncodeQuestionnaireCsv(
    std::span<const QuestionnaireResponse> responses);

// Whole-file read; throws kUnreadableFile.
std::string ReadTextFile(const std::filesystem::path& path);
// Write to a sibling temporary, then rename over `path`. Throws kIo.
void WriteTextFileAtomic(const std::filesystem::path& path,
                         std::string_view text);

}  // namespace adjustsat::analysis

#endif  // ADJUSTSAT_RESULTS_IO_H_
