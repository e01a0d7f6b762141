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

#include "adjustsat/audiogram.h"

#include <algorithm>
#include <cmath>

#include "adjustsat/error.h"

namespace adjustsat::analysis {

void ValidateAudiogram(const Audiogram& a) {
  const std::string who = "audiogram of " + a.participant_id;
  if (a.frequencies_hz.size() != a.left_dbhl.size() ||
      a.frequencies_hz.size() != a.right_dbhl.size()) {
    throw Error(ErrorCode::kMalformedInput, who + ": ear lengths differ");
  }
  for (std::size_t i = 0; i < a.frequencies_hz.size(); ++i) {
    if (!(a.frequencies_hz[i] > 0.0) || !std::isfinite(a.frequencies_hz[i])) {
      throw Error(ErrorCode::kMalformedInput, who + ": bad frequency");
    }
    if (i > 0 && a.frequencies_hz[i] <= a.frequencies_hz[i - 1]) {
      throw Error(ErrorCode::kMalformedInput,
                  who + ": frequencies not strictly ascending");
    }
    if (!std::isfinite(a.left_dbhl[i]) || !std::isfinite(a.right_dbhl[i])) {
      throw Error(ErrorCode::kMalformedInput, who + ": non-finite threshold");
    }
  }
}

std::vector<double> BetterEar(const Audiogram& a) {
  std::vector<double> out(a.frequencies_hz.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::min(a.left_dbhl[i], a.right_dbhl[i]);
  }
  return out;
}

AudiogramSummary SummarizeAudiograms(std::span<const Audiogram> audiograms) {
  AudiogramSummary s;
  if (audiograms.empty()) return s;
  s.frequencies_hz = audiograms.front().frequencies_hz;
  const std::size_t k = s.frequencies_hz.size();
  s.mean_better_ear.assign(k, 0.0);
  s.lower_envelope.assign(k, 0.0);
  s.upper_envelope.assign(k, 0.0);

  std::vector<std::vector<double>> columns(k);
  for (const Audiogram& a : audiograms) {
    ValidateAudiogram(a);
    if (a.frequencies_hz != s.frequencies_hz) {
      throw Error(ErrorCode::kFrequencyMismatch,
                  "audiogram of " + a.participant_id +
                      " uses a different frequency list");
    }
    const std::vector<double> better = BetterEar(a);
    for (std::size_t i = 0; i < k; ++i) columns[i].push_back(better[i]);
  }
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<double>& c = columns[i];
    std::sort(c.begin(), c.end());
    double sum = 0.0;
    for (double v : c) sum += v;
    s.mean_better_ear[i] = sum / static_cast<double>(c.size());
    s.lower_envelope[i] = c.front();
    s.upper_envelope[i] = c.back();
  }
  s.participants = audiograms.size();
  return s;
}

}  // namespace adjustsat::analysis
