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

#include "adjustsat/plot.h"

#include <gtest/gtest.h>

namespace adjustsat::analysis {
namespace {

using nlohmann::json;
using stimulus::DeMethod;
using stimulus::ProdType;

TrialResult Result(std::string pid, std::string label, DeMethod m, double default_ld,
                   double ld, int satisfaction) {
  TrialResult r;
  r.participant_id = std::move(pid);
  r.item_label = std::move(label);
  r.de_method = m;
  r.prod_type = ProdType::kWdr;
  r.chosen_ld = ld;
  r.chosen_offset = default_ld - ld;
  r.satisfaction_value = satisfaction;
  r.satisfaction_label = session::LabelFor(satisfaction);
  return r;
}

std::vector<TrialResult> Sample() {
  std::vector<TrialResult> r;
  // WDR1 OO: 1..9 plus a near (20) and a far (40) outlier.
  for (int i = 1; i <= 9; ++i) {
    r.push_back(Result("P" + std::to_string(i), "WDR1", DeMethod::kOo, 11.0, i, 15 + i));
  }
  r.push_back(Result("P10", "WDR1", DeMethod::kOo, 11.0, 20.0, 20));
  r.push_back(Result("P11", "WDR1", DeMethod::kOo, 11.0, 40.0, 20));
  for (int i = 1; i <= 4; ++i) {
    r.push_back(Result("P" + std::to_string(i), "WDR1", DeMethod::kDs, 11.0, 10 + i, 25));
  }
  return r;
}

std::size_t Count(const json& array, const std::string& key, const std::string& value) {
  std::size_t n = 0;
  for (const json& e : array) n += e.value(key, "") == value;
  return n;
}

std::size_t Occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

TEST(PlotTest, LdFigureGeometry) {
  const Aggregation stats = FigureStats(Sample());
  const json doc = ExportPlotData(stats, PlotLayout::kLdFigure,
                                  PlotReferences{{{"WDR1 DS", 19.9}}});
  EXPECT_EQ(doc["layout"], "ld-figure");
  EXPECT_EQ(doc["x_axis"]["scale"], "category");
  ASSERT_EQ(doc["boxes"].size(), 4u);
  EXPECT_EQ(doc["boxes"][0]["group"], "WDR1 OO");
  EXPECT_EQ(doc["boxes"][0]["color"], "red");
  EXPECT_EQ(doc["boxes"][1]["color"], "blue");
  EXPECT_EQ(doc["boxes"][3]["group"], "All DS");
  EXPECT_EQ(doc["boxes"][2]["x"], 2.0);
  EXPECT_EQ(doc["boxes"][0]["width"], 0.6);
  EXPECT_EQ(doc["boxes"][0]["n"], 11);

  const json& markers = doc["markers"];
  EXPECT_EQ(Count(markers, "shape", "cross"), 2u);   // 20 in two boxes
  EXPECT_EQ(Count(markers, "shape", "circle"), 2u);  // 40 in two boxes
  EXPECT_EQ(Count(markers, "shape", "x"), 2u);       // DS means
  for (const json& m : markers) {
    if (m["shape"] == "circle") EXPECT_EQ(m["y"], 40.0);
    if (m["shape"] == "x") EXPECT_EQ(m["y"], 12.5);
  }

  const json& lines = doc["lines"];
  EXPECT_EQ(Count(lines, "kind", "default-ld"), 4u);
  EXPECT_EQ(Count(lines, "kind", "mean-default-ld"), 1u);
  EXPECT_EQ(Count(lines, "kind", "mean"), 2u);
  EXPECT_EQ(Count(lines, "kind", "max"), 1u);
  for (const json& l : lines) {
    if (l["kind"] == "max") {
      EXPECT_EQ(l["points"][0][1], 19.9);
      EXPECT_EQ(l["style"], "dashed");
      EXPECT_EQ(l["color"], "blue");
    }
    if (l["kind"] == "mean") EXPECT_EQ(l["style"], "solid");
  }
  EXPECT_LE(doc["y_axis"]["min"].get<double>(), 1.0);
  EXPECT_GE(doc["y_axis"]["max"].get<double>(), 40.0);
}

TEST(PlotTest, SatisfactionAxisStartsAtNeutral) {
  const Aggregation stats = FigureStats(Sample());
  const json doc = ExportPlotData(stats, PlotLayout::kSatisfactionFigure);
  EXPECT_EQ(doc["y_axis"]["min"], 15.0);
  EXPECT_EQ(doc["y_axis"]["max"], 30.0);
  EXPECT_EQ(doc["y_axis"]["ticks"][0]["label"], "The same as");
  EXPECT_EQ(doc["y_axis"]["ticks"].size(), 4u);
  EXPECT_EQ(Count(doc["lines"], "kind", "default-ld"), 0u);

  std::vector<TrialResult> low = Sample();
  low.push_back(Result("P12", "WDR1", DeMethod::kOo, 11.0, 5.0, 3));
  const json wide = ExportPlotData(FigureStats(low), PlotLayout::kSatisfactionFigure);
  EXPECT_EQ(wide["y_axis"]["min"], 0.0);
  EXPECT_EQ(wide["y_axis"]["ticks"][0]["label"], "Much worse");
}

TEST(PlotTest, ExportIsDeterministic) {
  const Aggregation stats = FigureStats(Sample());
  EXPECT_EQ(ExportPlotData(stats, PlotLayout::kLdFigure).dump(),
            ExportPlotData(stats, PlotLayout::kLdFigure).dump());
}

TEST(PlotTest, AudiogramDocument) {
  AudiogramSummary s;
  s.frequencies_hz = {250, 1000, 4000};
  s.mean_better_ear = {10, 15, 30};
  s.lower_envelope = {0, 5, 10};
  s.upper_envelope = {20, 25, 55};
  s.participants = 4;
  const json doc = ExportAudiogramPlot(s);
  EXPECT_EQ(doc["x_axis"]["scale"], "log");
  EXPECT_EQ(doc["y_axis"]["inverted"], true);
  EXPECT_EQ(doc["y_axis"]["max"], 70.0);
  ASSERT_EQ(doc["lines"].size(), 3u);
  EXPECT_EQ(doc["lines"][0]["color"], "grey");
  EXPECT_EQ(doc["lines"][1]["color"], "blue");
  EXPECT_EQ(doc["lines"][2]["color"], "red");
  EXPECT_EQ(doc["lines"][2]["points"][2], json::array({4000.0, 55.0}));
  EXPECT_TRUE(ExportAudiogramPlot(AudiogramSummary{})["lines"].empty());
}

TEST(PlotTest, QuestionnaireDocument) {
  QuestionnaireTally t;
  t.n = 3;
  t.q0 = {1, 1, 1, 0, 0};
  t.q5 = {0, 1, 0, 2};
  t.problem_share = 1.0 / 3.0;
  const json doc = ExportQuestionnairePlot(t);
  EXPECT_EQ(doc["bars"].size(), 9u);
  EXPECT_EQ(doc["bars"][8]["label"], "Never");
  EXPECT_EQ(doc["bars"][8]["count"], 2);
  EXPECT_EQ(doc["charts"].size(), 2u);
  EXPECT_TRUE(ExportQuestionnairePlot(QuestionnaireTally{})["problem_share"].is_null());
}

TEST(PlotTest, SvgProjection) {
  const Aggregation stats = FigureStats(Sample());
  const std::string svg = RenderSvg(ExportPlotData(stats, PlotLayout::kLdFigure));
  EXPECT_EQ(svg.rfind("<svg", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_EQ(Occurrences(svg, "<circle"), 2u);
  EXPECT_EQ(Occurrences(svg, "<rect"), 6u);  // background, frame, four boxes
  EXPECT_NE(svg.find("stroke-dasharray"), std::string::npos);
  EXPECT_EQ(svg, RenderSvg(ExportPlotData(stats, PlotLayout::kLdFigure)));

  QuestionnaireTally t;
  t.n = 1;
  t.q0[0] = 1;
  t.q5[3] = 1;
  const std::string bars = RenderSvg(ExportQuestionnairePlot(t));
  EXPECT_EQ(Occurrences(bars, "fill=\"#4a78b5\""), 9u);
  EXPECT_NE(RenderSvg(ExportAudiogramPlot(AudiogramSummary{})).find("</svg>"),
            std::string::npos);
}

}  // namespace
}  // namespace adjustsat::analysis
