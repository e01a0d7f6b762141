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

#ifndef ADJUSTSAT_LD_GRID_H_
#define ADJUSTSAT_LD_GRID_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace adjustsat::stimulus {

// One "from:step:to" run of background offsets, inclusive at both ends.
struct GridSegment {
  double from = 0.0;
  double step = 1.0;
  double to = 0.0;

  friend bool operator==(const GridSegment&, const GridSegment&) = default;
};

// Background level offsets in LU, strictly descending, containing 0.
// Positive offsets amplify the background, negative ones attenuate it.
class LdGrid {
 public:
  const std::vector<GridSegment>& segments() const noexcept { return segments_; }
  const std::vector<double>& offsets() const noexcept { return offsets_; }

  std::size_t size() const noexcept { return offsets_.size(); }
  double max_offset() const noexcept { return offsets_.front(); }
  double min_offset() const noexcept { return offsets_.back(); }
  double span() const noexcept { return max_offset() - min_offset(); }

  // Index of the 0 LU (default) offset.
  std::size_t default_index() const noexcept { return default_index_; }

  friend bool operator==(const LdGrid&, const LdGrid&) = default;

 private:
  friend LdGrid ParseGrid(std::string_view spec);
  friend LdGrid MakeGrid(std::vector<GridSegment> segments);

  std::vector<GridSegment> segments_;
  std::vector<double> offsets_;
  std::size_t default_index_ = 0;
};

// Parses "from:step:to;from:step:to", e.g. "+12:1:-15;-16:2:-40".
// Errors: kMalformedSpec (syntax, from <= to, step <= 0, step not dividing
// the segment), kNonMonotonic (segments overlap or ascend), kMissingDefault.
LdGrid ParseGrid(std::string_view spec);

// Same validation as ParseGrid for already-split segments.
LdGrid MakeGrid(std::vector<GridSegment> segments);

// Inverse of ParseGrid in the same scheme; ParseGrid(FormatGrid(g)) == g.
std::string FormatGrid(const LdGrid& grid);

// Offsets are stored rounded to this resolution so that decimal steps such
// as 0.2 LU expand to exact decimal values.
inline constexpr double kOffsetResolution = 1e-6;

}  // namespace adjustsat::stimulus

#endif  // ADJUSTSAT_LD_GRID_H_
