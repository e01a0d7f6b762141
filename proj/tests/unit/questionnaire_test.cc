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

#include <gtest/gtest.h>

#include "adjustsat/error.h"

namespace adjustsat::analysis {
namespace {

QuestionnaireResponse Response(std::string pid, HearingSelfAssessment q0,
                               TvSpeechProblems q5) {
  QuestionnaireResponse r;
  r.participant_id = std::move(pid);
  r.q0 = q0;
  r.q5 = q5;
  return r;
}

TEST(QuestionnaireTest, OptionTextRoundTrips) {
  for (auto a : {HearingSelfAssessment::kExcellent, HearingSelfAssessment::kGood,
                 HearingSelfAssessment::kAverage, HearingSelfAssessment::kModerate,
                 HearingSelfAssessment::kPoor}) {
    EXPECT_EQ(ParseHearingSelfAssessment(OptionText(a)), a);
  }
  for (auto p : {TvSpeechProblems::kEveryDay, TvSpeechProblems::kWeekly,
                 TvSpeechProblems::kMonthly, TvSpeechProblems::kNever}) {
    EXPECT_EQ(ParseTvSpeechProblems(OptionText(p)), p);
  }
}

TEST(QuestionnaireTest, ParsingIsCaseInsensitive) {
  EXPECT_EQ(ParseHearingSelfAssessment("gOOd"), HearingSelfAssessment::kGood);
  EXPECT_EQ(ParseTvSpeechProblems("everyday"), TvSpeechProblems::kEveryDay);
  EXPECT_EQ(ParseTvSpeechProblems("AT LEAST ONCE A WEEK"), TvSpeechProblems::kWeekly);
  EXPECT_EQ(OptionText(TvSpeechProblems::kMonthly), "At least once a month");
  try {
    ParseHearingSelfAssessment("Bad");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedInput);
  }
  EXPECT_THROW(ParseTvSpeechProblems("sometimes"), Error);
}

TEST(QuestionnaireTest, Tally) {
  const std::vector<QuestionnaireResponse> r = {
      Response("P1", HearingSelfAssessment::kGood, TvSpeechProblems::kNever),
      Response("P2", HearingSelfAssessment::kGood, TvSpeechProblems::kWeekly),
      Response("P3", HearingSelfAssessment::kPoor, TvSpeechProblems::kEveryDay),
      Response("P4", HearingSelfAssessment::kExcellent, TvSpeechProblems::kWeekly),
  };
  const QuestionnaireTally t = TallyQuestionnaires(r);
  EXPECT_EQ(t.n, 4u);
  EXPECT_EQ(t.q0, (std::array<std::size_t, 5>{1, 2, 0, 0, 1}));
  EXPECT_EQ(t.q5, (std::array<std::size_t, 4>{1, 2, 0, 1}));
  EXPECT_DOUBLE_EQ(*t.problem_share, 0.75);
  const QuestionnaireTally empty = TallyQuestionnaires({});
  EXPECT_EQ(empty.n, 0u);
  EXPECT_FALSE(empty.problem_share);
}

}  // namespace
}  // namespace adjustsat::analysis
