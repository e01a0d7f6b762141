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

#ifndef ADJUSTSAT_BOX_STATS_H_
#define ADJUSTSAT_BOX_STATS_H_

#include <cstddef>
#include <span>
#include <vector>

namespace adjustsat::analysis {

// Box-plot summary. Whiskers end on data points inside the 1.5 IQR fences;
// points beyond them are near outliers up to 3 IQR from the nearer quartile
// (drawn as crosses) and far outliers past that (drawn as circles).
struct BoxStats {
  std::size_t n = 0;
  double mean = 0.0;
  double q1 = 0.0;
  double median = 0.0;
  double q3 = 0.0;
  double iqr = 0.0;
  double whisker_lo = 0.0;
  double whisker_hi = 0.0;
  std::vector<double> outliers_near;  // ascending
  std::vector<double> outliers_far;   // ascending

  friend bool operator==(const BoxStats&, const BoxStats&) = default;
};

// Linear interpolation between order statistics at position (n - 1) * p.
// `sorted` must be ascending and non-empty.
double Quantile(std::span<const double> sorted, double p);

enum class OutlierClass { kNone, kNear, kFar };

// Classification of `v` against the fences of quartiles q1/q3.
OutlierClass ClassifyOutlier(double v, double q1, double q3);

// Throws kEmptyInput for no values and kInvalidArgument for non-finite ones.
BoxStats ComputeBoxStats(std::span<const double> values);

}  // namespace adjustsat::analysis

#endif  // ADJUSTSAT_BOX_STATS_H_
