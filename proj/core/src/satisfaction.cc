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

#include <algorithm>
#include <string>

#include "adjustsat/error.h"

namespace adjustsat::session {

namespace {

struct LabelText {
  std::string_view english;
  std::string_view german;
};

constexpr std::array<LabelText, 7> kLabelText = {{
    {"Much worse", "viel schlechter als"},
    {"Worse", "schlechter als"},
    {"Slightly worse", "etwas schlechter als"},
    {"The same as", "genauso wie"},
    {"Slightly better", "etwas besser als"},
    {"Better", "besser als"},
    {"Much better", "viel besser als"},
}};

}  // namespace

SatisfactionLabel LabelFor(int value) {
  const int v = std::clamp(value, kSatisfactionMin, kSatisfactionMax);
  const int index = (v + kSatisfactionAnchorSpacing / 2) / kSatisfactionAnchorSpacing;
  return kAllSatisfactionLabels[static_cast<std::size_t>(index)];
}

int AnchorValue(SatisfactionLabel label) {
  return static_cast<int>(label) * kSatisfactionAnchorSpacing;
}

std::string_view EnglishLabel(SatisfactionLabel label) {
  return kLabelText[static_cast<std::size_t>(label)].english;
}

std::string_view GermanLabel(SatisfactionLabel label) {
  return kLabelText[static_cast<std::size_t>(label)].german;
}

SatisfactionLabel ParseSatisfactionLabel(std::string_view text) {
  for (SatisfactionLabel label : kAllSatisfactionLabels) {
    if (EnglishLabel(label) == text) return label;
  }
  throw Error(ErrorCode::kMalformedInput,
              "unknown satisfaction label '" + std::string(text) + "'");
}

}  // namespace adjustsat::session
