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

#ifndef ADJUSTSAT_AUDIOGRAM_H_
#define ADJUSTSAT_AUDIOGRAM_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace adjustsat::analysis {

// Pure-tone thresholds of one participant in dBHL.
struct Audiogram {
  std::string participant_id;
  std::vector<double> frequencies_hz;  // strictly ascending
  std::vector<double> left_dbhl;
  std::vector<double> right_dbhl;

  friend bool operator==(const Audiogram&, const Audiogram&) = default;
};

// Throws kMalformedInput on length mismatch, non-ascending frequencies or
// non-finite thresholds.
void ValidateAudiogram(const Audiogram& a);

// Per-frequency minimum of the two ears (lower threshold hears better).
std::vector<double> BetterEar(const Audiogram& a);

struct AudiogramSummary {
  std::vector<double> frequencies_hz;
  std::vector<double> mean_better_ear;
  std::vector<double> lower_envelope;  // best better-ear threshold
  std::vector<double> upper_envelope;  // worst better-ear threshold
  std::size_t participants = 0;

  friend bool operator==(const AudiogramSummary&,
                         const AudiogramSummary&) = default;
};

// An empty input gives an empty summary. Throws kFrequencyMismatch when the
// audiograms do not share one frequency list.
AudiogramSummary SummarizeAudiograms(std::span<const Audiogram> audiograms);

}  // namespace adjustsat::analysis

#endif  // ADJUSTSAT_AUDIOGRAM_H_
