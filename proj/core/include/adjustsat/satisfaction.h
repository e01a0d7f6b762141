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

#ifndef ADJUSTSAT_SATISFACTION_H_
#define ADJUSTSAT_SATISFACTION_H_

#include <array>
#include <string_view>

namespace adjustsat::session {

// Satisfaction is an integer 0..30. The seven labels sit on the anchors
// 0, 5, ..., 30; 25 is "Better".
inline constexpr int kSatisfactionMin = 0;
inline constexpr int kSatisfactionMax = 30;
inline constexpr int kSatisfactionNeutral = 15;
inline constexpr int kSatisfactionAnchorSpacing = 5;

enum class SatisfactionLabel {
  kMuchWorse,
  kWorse,
  kSlightlyWorse,
  kTheSameAs,
  kSlightlyBetter,
  kBetter,
  kMuchBetter,
};

inline constexpr std::array<SatisfactionLabel, 7> kAllSatisfactionLabels = {
    SatisfactionLabel::kMuchWorse,      SatisfactionLabel::kWorse,
    SatisfactionLabel::kSlightlyWorse,  SatisfactionLabel::kTheSameAs,
    SatisfactionLabel::kSlightlyBetter, SatisfactionLabel::kBetter,
    SatisfactionLabel::kMuchBetter};

// Label of the nearest anchor. Values are clamped into 0..30 first.
SatisfactionLabel LabelFor(int value);
int AnchorValue(SatisfactionLabel label);

std::string_view EnglishLabel(SatisfactionLabel label);  // "The same as"
std::string_view GermanLabel(SatisfactionLabel label);   // "genauso wie"
// Accepts the English label text. Throws kMalformedInput otherwise.
SatisfactionLabel ParseSatisfactionLabel(std::string_view text);

}  // namespace adjustsat::session

#endif  // ADJUSTSAT_SATISFACTION_H_
