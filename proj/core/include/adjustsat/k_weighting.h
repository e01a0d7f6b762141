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

#ifndef ADJUSTSAT_K_WEIGHTING_H_
#define ADJUSTSAT_K_WEIGHTING_H_

#include <span>
#include <vector>

namespace adjustsat::loudness {

// Normalized biquad, a0 == 1.
struct BiquadCoefficients {
  double b0 = 1.0;
  double b1 = 0.0;
  double b2 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
};

struct KWeightingCoefficients {
  BiquadCoefficients shelf;      // stage 1, head-related high shelf
  BiquadCoefficients high_pass;  // stage 2, RLB high-pass
};

// Designs both K-weighting stages for any sample rate from the analog
// prototype (shelf: f0 1681.97 Hz, +4 dB, Q 0.7072; high-pass: f0 38.135 Hz,
// Q 0.5003) with the bilinear transform. At 48 kHz the result matches the
// tabulated coefficients of BS.1770 to better than 1e-8.
KWeightingCoefficients DesignKWeighting(int sample_rate);

// Filters one channel through both stages, starting from zero state.
std::vector<double> ApplyKWeighting(const KWeightingCoefficients& k,
                                    std::span<const double> input);

}  // namespace adjustsat::loudness

#endif  // ADJUSTSAT_K_WEIGHTING_H_
