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

#ifndef ADJUSTSAT_PLOT_H_
#define ADJUSTSAT_PLOT_H_

#include <map>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "adjustsat/analysis.h"
#include "adjustsat/audiogram.h"
#include "adjustsat/questionnaire.h"

namespace adjustsat::analysis {

enum class PlotLayout { kLdFigure, kSatisfactionFigure };
std::string_view PlotLayoutName(PlotLayout layout);  // "ld-figure", ...

struct PlotReferences {
  // Highest LD reachable per group key, drawn as dashed maxima lines.
  std::map<std::string, double> max_ld;
};

// Geometry document with `boxes`, `markers` and `lines` arrays in data
// coordinates. Boxes sit at x = 0, 1, ... in group order. OO is red, DS blue.
// Markers: "cross" (near outlier), "circle" (far outlier), "x" (DS mean).
// Lines: "default-ld" per box and "mean-default-ld" across the figure (LD
// layout only), "mean" per method, "max" per box with a known maximum.
nlohmann::json ExportPlotData(const Aggregation& stats, PlotLayout layout,
                              const PlotReferences& refs = {});

// Better-ear mean (grey), best (blue dashed) and worst (red dashed) curves.
nlohmann::json ExportAudiogramPlot(const AudiogramSummary& summary);

// One bar chart per closed question.
nlohmann::json ExportQuestionnairePlot(const QuestionnaireTally& tally);

// Direct projection of any of the documents above.
std::string RenderSvg(const nlohmann::json& doc);

}  // namespace adjustsat::analysis

#endif  // ADJUSTSAT_PLOT_H_
