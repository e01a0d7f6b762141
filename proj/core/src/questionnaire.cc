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

#include "adjustsat/questionnaire.h"

#include <algorithm>
#include <cctype>

#include "adjustsat/error.h"

namespace adjustsat::analysis {

namespace {

bool EqualsIgnoreCase(std::string_view a, std::string_view b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(), [](char x, char y) {
    return std::tolower(static_cast<unsigned char>(x)) ==
           std::tolower(static_cast<unsigned char>(y));
  });
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::string_view OptionText(HearingSelfAssessment a) {
  switch (a) {
    case HearingSelfAssessment::kExcellent: return "Excellent";
    case HearingSelfAssessment::kGood: return "Good";
    case HearingSelfAssessment::kAverage: return "Average";
    case HearingSelfAssessment::kModerate: return "Moderate";
    case HearingSelfAssessment::kPoor: return "Poor";
  }
  return "";
}

std::string_view OptionText(TvSpeechProblems p) {
  switch (p) {
    case TvSpeechProblems::kEveryDay: return "Every day";
    case TvSpeechProblems::kWeekly: return "At least once a week";
    case TvSpeechProblems::kMonthly: return "At least once a month";
    case TvSpeechProblems::kNever: return "Never";
  }
  return "";
}

HearingSelfAssessment ParseHearingSelfAssessment(std::string_view s) {
  s = Trim(s);
  for (std::size_t i = 0; i < kHearingOptionCount; ++i) {
    const auto a = static_cast<HearingSelfAssessment>(i);
    if (EqualsIgnoreCase(s, OptionText(a))) return a;
  }
  throw Error(ErrorCode::kMalformedInput,
              "unknown hearing self-assessment '" + std::string(s) + "'");
}

TvSpeechProblems ParseTvSpeechProblems(std::string_view s) {
  s = Trim(s);
  if (EqualsIgnoreCase(s, "Everyday")) return TvSpeechProblems::kEveryDay;
  for (std::size_t i = 0; i < kTvProblemOptionCount; ++i) {
    const auto p = static_cast<TvSpeechProblems>(i);
    if (EqualsIgnoreCase(s, OptionText(p))) return p;
  }
  throw Error(ErrorCode::kMalformedInput,
              "unknown TV speech answer '" + std::string(s) + "'");
}

QuestionnaireTally TallyQuestionnaires(
    std::span<const QuestionnaireResponse> responses) {
  QuestionnaireTally t;
  t.n = responses.size();
  for (const QuestionnaireResponse& r : responses) {
    ++t.q0[static_cast<std::size_t>(r.q0)];
    ++t.q5[static_cast<std::size_t>(r.q5)];
  }
  if (t.n > 0) {
    const auto never = t.q5[static_cast<std::size_t>(TvSpeechProblems::kNever)];
    t.problem_share = static_cast<double>(t.n - never) / static_cast<double>(t.n);
  }
  return t;
}

}  // namespace adjustsat::analysis
