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

#include "adjustsat/box_stats.h"

#include <algorithm>
#include <cmath>

#include "adjustsat/error.h"

namespace adjustsat::analysis {

double Quantile(std::span<const double> sorted, double p) {
  const double h = static_cast<double>(sorted.size() - 1) * p;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  if (lo + 1 >= sorted.size()) return sorted[sorted.size() - 1];
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

OutlierClass ClassifyOutlier(double v, double q1, double q3) {
  const double iqr = q3 - q1;
  if (v < q1 - 3.0 * iqr || v > q3 + 3.0 * iqr) return OutlierClass::kFar;
  if (v < q1 - 1.5 * iqr || v > q3 + 1.5 * iqr) return OutlierClass::kNear;
  return OutlierClass::kNone;
}

BoxStats ComputeBoxStats(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::kEmptyInput, "no values");
  std::vector<double> sorted(values.begin(), values.end());
  for (double v : sorted) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kInvalidArgument, "non-finite value");
    }
  }
  std::sort(sorted.begin(), sorted.end());

  BoxStats s;
  s.n = sorted.size();
  double sum = 0.0;
  for (double v : sorted) sum += v;  // sorted order keeps the mean order-free
  s.mean = sum / static_cast<double>(s.n);
  s.q1 = Quantile(sorted, 0.25);
  s.median = Quantile(sorted, 0.5);
  s.q3 = Quantile(sorted, 0.75);
  s.iqr = s.q3 - s.q1;

  bool have_whisker = false;
  for (double v : sorted) {
    switch (ClassifyOutlier(v, s.q1, s.q3)) {
      case OutlierClass::kFar:
        s.outliers_far.push_back(v);
        break;
      case OutlierClass::kNear:
        s.outliers_near.push_back(v);
        break;
      case OutlierClass::kNone:
        if (!have_whisker) s.whisker_lo = v;
        s.whisker_hi = v;
        have_whisker = true;
        break;
    }
  }
  return s;
}

}  // namespace adjustsat::analysis
