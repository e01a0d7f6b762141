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

#ifndef ADJUSTSAT_QUESTIONNAIRE_H_
#define ADJUSTSAT_QUESTIONNAIRE_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace adjustsat::analysis {

// q0: self-assessment of one's own hearing.
enum class HearingSelfAssessment { kExcellent, kGood, kAverage, kModerate, kPoor };
inline constexpr std::size_t kHearingOptionCount = 5;

// q5: how often speech on TV is hard to follow.
enum class TvSpeechProblems { kEveryDay, kWeekly, kMonthly, kNever };
inline constexpr std::size_t kTvProblemOptionCount = 4;

std::string_view OptionText(HearingSelfAssessment a);  // "Excellent"
std::string_view OptionText(TvSpeechProblems p);       // "At least once a week"

// Case-insensitive option text; "Everyday" is accepted for "Every day".
// Throws kMalformedInput.
HearingSelfAssessment ParseHearingSelfAssessment(std::string_view s);
TvSpeechProblems ParseTvSpeechProblems(std::string_view s);

struct QuestionnaireResponse {
  std::string participant_id;
  HearingSelfAssessment q0 = HearingSelfAssessment::kAverage;
  std::array<std::string, 4> q1_to_q4;  // free text
  TvSpeechProblems q5 = TvSpeechProblems::kNever;
  std::string q6;  // free text

  friend bool operator==(const QuestionnaireResponse&,
                         const QuestionnaireResponse&) = default;
};

struct QuestionnaireTally {
  std::size_t n = 0;
  std::array<std::size_t, kHearingOptionCount> q0{};
  std::array<std::size_t, kTvProblemOptionCount> q5{};
  // Share reporting any TV speech problem, 1 - Never / n; none when n = 0.
  std::optional<double> problem_share;

  friend bool operator==(const QuestionnaireTally&,
                         const QuestionnaireTally&) = default;
};

QuestionnaireTally TallyQuestionnaires(
    std::span<const QuestionnaireResponse> responses);

}  // namespace adjustsat::analysis

#endif  // ADJUSTSAT_QUESTIONNAIRE_H_
