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

#ifndef ADJUSTSAT_ANALYSIS_H_
#define ADJUSTSAT_ANALYSIS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adjustsat/box_stats.h"
#include "adjustsat/stimulus.h"
#include "adjustsat/trial_result.h"

namespace adjustsat::analysis {

enum class Grouping { kByItem, kByListener, kByDeMethod, kByProdType, kAll };

std::string_view GroupingName(Grouping g);  // "by-item", ..., "all"
Grouping ParseGrouping(std::string_view s);

struct GroupStats {
  std::string key;  // "WDR1 OO", a pid, "OO", "AR" or "All"
  // Set when every member shares one method; drives OO/DS colouring.
  std::optional<stimulus::DeMethod> de_method;
  BoxStats ld;            // over chosen_ld
  BoxStats satisfaction;  // over satisfaction_value
  // Mean default LD of the distinct items in the group.
  double default_ld = 0.0;

  friend bool operator==(const GroupStats&, const GroupStats&) = default;
};

struct MethodMeans {
  std::size_t n = 0;
  double ld = 0.0;
  double satisfaction = 0.0;

  friend bool operator==(const MethodMeans&, const MethodMeans&) = default;
};

struct Aggregation {
  Grouping grouping = Grouping::kAll;
  std::vector<GroupStats> groups;  // deterministic order, see Aggregate
  // Expected groups with no members (OO/DS or AR/WDR); not fatal.
  std::vector<std::string> empty_groups;

  // Whole-input reference values drawn as the mean lines of the figures.
  std::optional<MethodMeans> oo_mean;
  std::optional<MethodMeans> ds_mean;
  double mean_chosen_ld = 0.0;
  // Mean default LD over distinct item labels.
  double mean_default_ld = 0.0;

  const GroupStats* Find(std::string_view key) const;
};

// Groups are ordered by production type, label and method for by-item
// (OO before DS), by pid for by-listener, and by enum order otherwise.
// Throws kEmptyInput for no results.
Aggregation Aggregate(std::span<const TrialResult> results, Grouping grouping);

// Per-item groups followed by "All OO" and "All DS": the box layout of the
// LD and satisfaction figures.
Aggregation FigureStats(std::span<const TrialResult> results);

struct FilterOptions {
  // A participant whose invalid share exceeds this loses all results;
  // nullopt keeps only the per-trial rule.
  std::optional<double> participant_threshold = 0.5;
};

struct FilterResult {
  std::vector<TrialResult> valid;
  std::vector<TrialResult> discarded;
  std::vector<std::string> discarded_participants;  // sorted
};

// Order-preserving partition of `results`.
FilterResult ValidityFilter(std::span<const TrialResult> results,
                            const FilterOptions& options = {});

}  // namespace adjustsat::analysis

#endif  // ADJUSTSAT_ANALYSIS_H_
