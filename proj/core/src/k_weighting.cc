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

#include "adjustsat/k_weighting.h"

#include <cmath>
#include <numbers>

namespace adjustsat::loudness {

namespace {

constexpr double kShelfFrequency = 1681.974450955533;
constexpr double kShelfGainDb = 3.999843853973347;
constexpr double kShelfQ = 0.7071752369554196;
constexpr double kShelfBandGainExponent = 0.4996667741545416;
constexpr double kHighPassFrequency = 38.13547087602444;
constexpr double kHighPassQ = 0.5003270373238773;

// Transposed direct form II, one stage.
class Biquad {
 public:
  explicit Biquad(const BiquadCoefficients& c) : c_(c) {}

  double Process(double x) {
    const double y = c_.b0 * x + s1_;
    s1_ = c_.b1 * x - c_.a1 * y + s2_;
    s2_ = c_.b2 * x - c_.a2 * y;
    return y;
  }

 private:
  BiquadCoefficients c_;
  double s1_ = 0.0;
  double s2_ = 0.0;
};

}  // namespace

KWeightingCoefficients DesignKWeighting(int sample_rate) {
  const double rate = static_cast<double>(sample_rate);
  KWeightingCoefficients k;

  {
    const double kk = std::tan(std::numbers::pi * kShelfFrequency / rate);
    const double vh = std::pow(10.0, kShelfGainDb / 20.0);
    const double vb = std::pow(vh, kShelfBandGainExponent);
    const double a0 = 1.0 + kk / kShelfQ + kk * kk;
    k.shelf.b0 = (vh + vb * kk / kShelfQ + kk * kk) / a0;
    k.shelf.b1 = 2.0 * (kk * kk - vh) / a0;
    k.shelf.b2 = (vh - vb * kk / kShelfQ + kk * kk) / a0;
    k.shelf.a1 = 2.0 * (kk * kk - 1.0) / a0;
    k.shelf.a2 = (1.0 - kk / kShelfQ + kk * kk) / a0;
  }
  {
    const double kk = std::tan(std::numbers::pi * kHighPassFrequency / rate);
    const double a0 = 1.0 + kk / kHighPassQ + kk * kk;
    k.high_pass.b0 = 1.0;
    k.high_pass.b1 = -2.0;
    k.high_pass.b2 = 1.0;
    k.high_pass.a1 = 2.0 * (kk * kk - 1.0) / a0;
    k.high_pass.a2 = (1.0 - kk / kHighPassQ + kk * kk) / a0;
  }
  return k;
}

std::vector<double> ApplyKWeighting(const KWeightingCoefficients& k,
                                    std::span<const double> input) {
  Biquad shelf(k.shelf);
  Biquad high_pass(k.high_pass);
  std::vector<double> out(input.size());
  for (std::size_t i = 0; i < input.size(); ++i) {
    out[i] = high_pass.Process(shelf.Process(input[i]));
  }
  return out;
}

}  // namespace adjustsat::loudness
