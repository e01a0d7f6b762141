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

#include "adjustsat/analysis.h"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "adjustsat/error.h"

namespace adjustsat::analysis {

namespace {

using stimulus::DeMethod;
using stimulus::ProdType;

std::string ItemKey(const TrialResult& r) {
  return r.item_label + " " + std::string(stimulus::DeMethodName(r.de_method));
}

double MeanDefaultLd(std::span<const TrialResult* const> members) {
  std::map<std::string, std::pair<double, std::size_t>> by_label;
  for (const TrialResult* r : members) {
    auto& [sum, n] = by_label[r->item_label];
    sum += r->default_ld();
    ++n;
  }
  double total = 0.0;
  for (const auto& [label, acc] : by_label) {
    total += acc.first / static_cast<double>(acc.second);
  }
  return total / static_cast<double>(by_label.size());
}

GroupStats Summarize(std::string key,
                     std::span<const TrialResult* const> members) {
  GroupStats g;
  g.key = std::move(key);
  std::vector<double> ld, sat;
  ld.reserve(members.size());
  sat.reserve(members.size());
  bool same_method = true;
  for (const TrialResult* r : members) {
    ld.push_back(r->chosen_ld);
    sat.push_back(static_cast<double>(r->satisfaction_value));
    same_method = same_method && r->de_method == members.front()->de_method;
  }
  if (same_method) g.de_method = members.front()->de_method;
  g.ld = ComputeBoxStats(ld);
  g.satisfaction = ComputeBoxStats(sat);
  g.default_ld = MeanDefaultLd(members);
  return g;
}

std::optional<MethodMeans> MeansFor(std::span<const TrialResult> results,
                                    DeMethod method) {
  std::vector<double> ld, sat;
  for (const TrialResult& r : results) {
    if (r.de_method != method) continue;
    ld.push_back(r.chosen_ld);
    sat.push_back(r.satisfaction_value);
  }
  if (ld.empty()) return std::nullopt;
  return MethodMeans{ld.size(), ComputeBoxStats(ld).mean,
                     ComputeBoxStats(sat).mean};
}

// Sort key and display key of a result under a grouping.
using OrderKey = std::tuple<int, std::string, int>;

std::pair<OrderKey, std::string> KeyFor(const TrialResult& r, Grouping g) {
  switch (g) {
    case Grouping::kByItem:
      return {{static_cast<int>(r.prod_type), r.item_label,
               static_cast<int>(r.de_method)},
              ItemKey(r)};
    case Grouping::kByListener:
      return {{0, r.participant_id, 0}, r.participant_id};
    case Grouping::kByDeMethod:
      return {{static_cast<int>(r.de_method), "", 0},
              std::string(stimulus::DeMethodName(r.de_method))};
    case Grouping::kByProdType:
      return {{static_cast<int>(r.prod_type), "", 0},
              std::string(stimulus::ProdTypeName(r.prod_type))};
    case Grouping::kAll:
      return {{0, "", 0}, "All"};
  }
  return {};
}

}  // namespace

std::string_view GroupingName(Grouping g) {
  switch (g) {
    case Grouping::kByItem: return "by-item";
    case Grouping::kByListener: return "by-listener";
    case Grouping::kByDeMethod: return "by-de-method";
    case Grouping::kByProdType: return "by-prod-type";
    case Grouping::kAll: return "all";
  }
  return "";
}

Grouping ParseGrouping(std::string_view s) {
  for (Grouping g : {Grouping::kByItem, Grouping::kByListener,
                     Grouping::kByDeMethod, Grouping::kByProdType,
                     Grouping::kAll}) {
    if (GroupingName(g) == s) return g;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown grouping '" + std::string(s) + "'");
}

const GroupStats* Aggregation::Find(std::string_view key) const {
  for (const GroupStats& g : groups) {
    if (g.key == key) return &g;
  }
  return nullptr;
}

Aggregation Aggregate(std::span<const TrialResult> results, Grouping grouping) {
  if (results.empty()) throw Error(ErrorCode::kEmptyInput, "no results");
  Aggregation agg;
  agg.grouping = grouping;

  std::map<OrderKey, std::pair<std::string, std::vector<const TrialResult*>>>
      buckets;
  for (const TrialResult& r : results) {
    auto [order, key] = KeyFor(r, grouping);
    auto& bucket = buckets[order];
    bucket.first = std::move(key);
    bucket.second.push_back(&r);
  }
  for (auto& [order, bucket] : buckets) {
    // Fixed member order so every statistic is independent of input order.
    std::sort(bucket.second.begin(), bucket.second.end(),
              [](const TrialResult* a, const TrialResult* b) {
                return std::tie(a->participant_id, a->item_number,
                                a->chosen_ld, a->satisfaction_value) <
                       std::tie(b->participant_id, b->item_number,
                                b->chosen_ld, b->satisfaction_value);
              });
    agg.groups.push_back(Summarize(bucket.first, bucket.second));
  }

  if (grouping == Grouping::kByDeMethod) {
    for (DeMethod m : {DeMethod::kOo, DeMethod::kDs}) {
      const std::string name(stimulus::DeMethodName(m));
      if (!agg.Find(name)) agg.empty_groups.push_back(name);
    }
  } else if (grouping == Grouping::kByProdType) {
    for (ProdType p : {ProdType::kAr, ProdType::kWdr}) {
      const std::string name(stimulus::ProdTypeName(p));
      if (!agg.Find(name)) agg.empty_groups.push_back(name);
    }
  }

  agg.oo_mean = MeansFor(results, DeMethod::kOo);
  agg.ds_mean = MeansFor(results, DeMethod::kDs);
  std::vector<double> ld;
  std::vector<const TrialResult*> all;
  for (const TrialResult& r : results) {
    ld.push_back(r.chosen_ld);
    all.push_back(&r);
  }
  agg.mean_chosen_ld = ComputeBoxStats(ld).mean;
  agg.mean_default_ld = MeanDefaultLd(all);
  return agg;
}

Aggregation FigureStats(std::span<const TrialResult> results) {
  Aggregation fig = Aggregate(results, Grouping::kByItem);
  const Aggregation methods = Aggregate(results, Grouping::kByDeMethod);
  for (GroupStats g : methods.groups) {
    g.key = "All " + g.key;
    fig.groups.push_back(std::move(g));
  }
  for (const std::string& e : methods.empty_groups) {
    fig.empty_groups.push_back("All " + e);
  }
  return fig;
}

FilterResult ValidityFilter(std::span<const TrialResult> results,
                            const FilterOptions& options) {
  std::set<std::string> dropped;
  if (options.participant_threshold) {
    std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
    for (const TrialResult& r : results) {
      auto& [invalid, total] = counts[r.participant_id];
      invalid += r.valid ? 0 : 1;
      ++total;
    }
    for (const auto& [pid, c] : counts) {
      const double share =
          static_cast<double>(c.first) / static_cast<double>(c.second);
      if (share > *options.participant_threshold) dropped.insert(pid);
    }
  }
  FilterResult out;
  for (const TrialResult& r : results) {
    if (r.valid && !dropped.contains(r.participant_id)) {
      out.valid.push_back(r);
    } else {
      out.discarded.push_back(r);
    }
  }
  out.discarded_participants.assign(dropped.begin(), dropped.end());
  return out;
}

}  // namespace adjustsat::analysis
