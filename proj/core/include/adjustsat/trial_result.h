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

#ifndef ADJUSTSAT_TRIAL_RESULT_H_
#define ADJUSTSAT_TRIAL_RESULT_H_

#include <cstddef>
#include <string>

#include "adjustsat/satisfaction.h"
#include "adjustsat/stimulus.h"

namespace adjustsat {

// Outcome of one confirmed, non-training trial.
struct TrialResult {
  std::string participant_id;
  std::size_t item_number = 0;  // playlist position; training is 0
  std::string item_id;          // not carried by the results CSV
  std::string item_label;
  stimulus::DeMethod de_method = stimulus::DeMethod::kOo;
  stimulus::ProdType prod_type = stimulus::ProdType::kWdr;
  double chosen_offset = 0.0;
  double chosen_ld = 0.0;  // default_ld - chosen_offset
  int satisfaction_value = session::kSatisfactionNeutral;
  session::SatisfactionLabel satisfaction_label =
      session::SatisfactionLabel::kTheSameAs;
  bool valid = true;  // false when rated below "The same as"

  double default_ld() const noexcept { return chosen_ld + chosen_offset; }

  friend bool operator==(const TrialResult&, const TrialResult&) = default;
};

}  // namespace adjustsat

#endif  // ADJUSTSAT_TRIAL_RESULT_H_
