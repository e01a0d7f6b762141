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

#include "adjustsat/satisfaction.h"

#include <gtest/gtest.h>

#include "adjustsat/error.h"

namespace adjustsat::session {
namespace {

TEST(SatisfactionTest, AnchorsCarryTheirLabels) {
  for (SatisfactionLabel label : kAllSatisfactionLabels) {
    EXPECT_EQ(LabelFor(AnchorValue(label)), label);
  }
  EXPECT_EQ(AnchorValue(SatisfactionLabel::kTheSameAs), kSatisfactionNeutral);
  EXPECT_EQ(AnchorValue(SatisfactionLabel::kBetter), 25);
  EXPECT_EQ(AnchorValue(SatisfactionLabel::kMuchBetter), kSatisfactionMax);
}

TEST(SatisfactionTest, NearestAnchorBetweenLabels) {
  EXPECT_EQ(LabelFor(12), SatisfactionLabel::kSlightlyWorse);
  EXPECT_EQ(LabelFor(13), SatisfactionLabel::kTheSameAs);
  EXPECT_EQ(LabelFor(17), SatisfactionLabel::kTheSameAs);
  EXPECT_EQ(LabelFor(18), SatisfactionLabel::kSlightlyBetter);
  EXPECT_EQ(LabelFor(2), SatisfactionLabel::kMuchWorse);
  EXPECT_EQ(LabelFor(28), SatisfactionLabel::kMuchBetter);
}

TEST(SatisfactionTest, OutOfRangeValuesClamp) {
  EXPECT_EQ(LabelFor(-40), SatisfactionLabel::kMuchWorse);
  EXPECT_EQ(LabelFor(99), SatisfactionLabel::kMuchBetter);
}

TEST(SatisfactionTest, Texts) {
  EXPECT_EQ(EnglishLabel(SatisfactionLabel::kTheSameAs), "The same as");
  EXPECT_EQ(GermanLabel(SatisfactionLabel::kTheSameAs), "genauso wie");
  EXPECT_EQ(GermanLabel(SatisfactionLabel::kMuchBetter), "viel besser als");
  for (SatisfactionLabel label : kAllSatisfactionLabels) {
    EXPECT_EQ(ParseSatisfactionLabel(EnglishLabel(label)), label);
  }
  try {
    ParseSatisfactionLabel("the same as");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedInput);
  }
}

}  // namespace
}  // namespace adjustsat::session
