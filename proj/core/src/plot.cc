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

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <fmt/format.h>

#include "adjustsat/satisfaction.h"

namespace adjustsat::analysis {

using nlohmann::json;

namespace {

constexpr double kBoxWidth = 0.6;

std::string_view MethodColor(const std::optional<stimulus::DeMethod>& m) {
  if (!m) return "black";
  return *m == stimulus::DeMethod::kOo ? "red" : "blue";
}

json Segment(std::string_view kind, double x0, double y0, double x1, double y1,
             std::string_view style, std::string_view color) {
  return json{{"kind", kind},
              {"points", json::array({json::array({x0, y0}),
                                      json::array({x1, y1})})},
              {"style", style},
              {"color", color}};
}

const BoxStats& Pick(const GroupStats& g, PlotLayout layout) {
  return layout == PlotLayout::kLdFigure ? g.ld : g.satisfaction;
}

json Axis(std::string_view label, double lo, double hi, json ticks) {
  return json{{"label", label}, {"min", lo}, {"max", hi}, {"ticks", std::move(ticks)}};
}

}  // namespace

std::string_view PlotLayoutName(PlotLayout layout) {
  return layout == PlotLayout::kLdFigure ? "ld-figure" : "satisfaction-figure";
}

json ExportPlotData(const Aggregation& stats, PlotLayout layout,
                    const PlotReferences& refs) {
  const bool ld = layout == PlotLayout::kLdFigure;
  json boxes = json::array(), markers = json::array(), lines = json::array();
  json x_ticks = json::array();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  auto extend = [&](double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  };

  for (std::size_t i = 0; i < stats.groups.size(); ++i) {
    const GroupStats& g = stats.groups[i];
    const BoxStats& b = Pick(g, layout);
    const double x = static_cast<double>(i);
    const std::string_view color = MethodColor(g.de_method);
    json box{{"x", x},
             {"width", kBoxWidth},
             {"group", g.key},
             {"color", color},
             {"n", b.n},
             {"mean", b.mean},
             {"q1", b.q1},
             {"median", b.median},
             {"q3", b.q3},
             {"whisker_lo", b.whisker_lo},
             {"whisker_hi", b.whisker_hi}};
    if (g.de_method) box["method"] = stimulus::DeMethodName(*g.de_method);
    boxes.push_back(std::move(box));
    x_ticks.push_back(json{{"x", x}, {"label", g.key}});
    extend(b.whisker_lo);
    extend(b.whisker_hi);

    for (double v : b.outliers_near) {
      markers.push_back(json{{"x", x}, {"y", v}, {"shape", "cross"},
                             {"class", "near"}, {"color", color},
                             {"group", g.key}});
      extend(v);
    }
    for (double v : b.outliers_far) {
      markers.push_back(json{{"x", x}, {"y", v}, {"shape", "circle"},
                             {"class", "far"}, {"color", color},
                             {"group", g.key}});
      extend(v);
    }
    if (g.de_method == stimulus::DeMethod::kDs) {
      markers.push_back(json{{"x", x}, {"y", b.mean}, {"shape", "x"},
                             {"class", "mean"}, {"color", color},
                             {"group", g.key}});
    }
    const double x0 = x - kBoxWidth / 2, x1 = x + kBoxWidth / 2;
    if (ld) {
      lines.push_back(
          Segment("default-ld", x0, g.default_ld, x1, g.default_ld, "dashed", "black"));
      extend(g.default_ld);
      if (auto it = refs.max_ld.find(g.key); it != refs.max_ld.end()) {
        lines.push_back(Segment("max", x0, it->second, x1, it->second, "dashed", color));
        lines.back()["group"] = g.key;
        extend(it->second);
      }
    }
  }

  const double x_lo = -0.5;
  const double x_hi = static_cast<double>(stats.groups.size()) - 0.5;
  if (ld && !stats.groups.empty()) {
    lines.push_back(Segment("mean-default-ld", x_lo, stats.mean_default_ld, x_hi,
                            stats.mean_default_ld, "dashed", "black"));
    extend(stats.mean_default_ld);
  }
  for (const auto& [means, method] :
       {std::pair{stats.oo_mean, stimulus::DeMethod::kOo},
        std::pair{stats.ds_mean, stimulus::DeMethod::kDs}}) {
    if (!means) continue;
    const double y = ld ? means->ld : means->satisfaction;
    json line = Segment("mean", x_lo, y, x_hi, y, "solid", MethodColor(method));
    line["method"] = stimulus::DeMethodName(method);
    lines.push_back(std::move(line));
    extend(y);
  }

  json y_axis;
  if (ld) {
    if (!std::isfinite(lo)) lo = hi = 0.0;
    const double y_lo = std::floor(lo / 5.0) * 5.0 - 5.0;
    const double y_hi = std::ceil(hi / 5.0) * 5.0 + 5.0;
    json ticks = json::array();
    for (double y = y_lo; y <= y_hi; y += 5.0) {
      ticks.push_back(json{{"y", y}, {"label", fmt::format("{}", y)}});
    }
    y_axis = Axis("LD in LU", y_lo, y_hi, std::move(ticks));
  } else {
    // Rating labels from the neutral anchor up, extended down when needed.
    const double y_lo =
        std::min<double>(session::kSatisfactionNeutral,
                         std::isfinite(lo) ? std::floor(lo / 5.0) * 5.0 : 15.0);
    json ticks = json::array();
    for (session::SatisfactionLabel l : session::kAllSatisfactionLabels) {
      const int v = session::AnchorValue(l);
      if (v < y_lo) continue;
      ticks.push_back(json{{"y", v}, {"label", session::EnglishLabel(l)}});
    }
    y_axis = Axis("Satisfaction", y_lo, session::kSatisfactionMax, std::move(ticks));
  }

  return json{
      {"layout", PlotLayoutName(layout)},
      {"title", ld ? "Preferred LD per item" : "Satisfaction per item"},
      {"grouping", GroupingName(stats.grouping)},
      {"x_axis", {{"label", "Item"}, {"scale", "category"}, {"min", x_lo},
                  {"max", x_hi}, {"ticks", std::move(x_ticks)}}},
      {"y_axis", std::move(y_axis)},
      {"boxes", std::move(boxes)},
      {"markers", std::move(markers)},
      {"lines", std::move(lines)},
  };
}

json ExportAudiogramPlot(const AudiogramSummary& s) {
  auto curve = [&](std::string_view kind, const std::vector<double>& ys,
                   std::string_view style, std::string_view color) {
    json points = json::array();
    for (std::size_t i = 0; i < ys.size(); ++i) {
      points.push_back(json::array({s.frequencies_hz[i], ys[i]}));
    }
    return json{{"kind", kind}, {"points", std::move(points)},
                {"style", style}, {"color", color}};
  };
  json lines = json::array();
  json x_ticks = json::array();
  double y_hi = 0.0, y_lo = 0.0;
  if (s.participants > 0) {
    lines.push_back(curve("mean-better-ear", s.mean_better_ear, "solid", "grey"));
    lines.push_back(curve("best-better-ear", s.lower_envelope, "dashed", "blue"));
    lines.push_back(curve("worst-better-ear", s.upper_envelope, "dashed", "red"));
    for (double f : s.frequencies_hz) {
      x_ticks.push_back(json{{"x", f}, {"label", fmt::format("{}", f)}});
    }
    y_lo = std::min(0.0, std::floor(*std::min_element(s.lower_envelope.begin(),
                                                      s.lower_envelope.end()) / 10) * 10);
    y_hi = std::ceil(*std::max_element(s.upper_envelope.begin(),
                                       s.upper_envelope.end()) / 10) * 10 + 10;
  }
  json y_ticks = json::array();
  for (double y = y_lo; y <= y_hi; y += 10.0) {
    y_ticks.push_back(json{{"y", y}, {"label", fmt::format("{}", y)}});
  }
  json y_axis = Axis("Hearing threshold in dBHL", y_lo, y_hi, std::move(y_ticks));
  y_axis["inverted"] = true;
  return json{
      {"layout", "audiogram"},
      {"title", "Better-ear audiograms"},
      {"participants", s.participants},
      {"x_axis",
       {{"label", "Frequency in Hz"}, {"scale", "log"},
        {"min", s.frequencies_hz.empty() ? 125.0 : s.frequencies_hz.front()},
        {"max", s.frequencies_hz.empty() ? 16000.0 : s.frequencies_hz.back()},
        {"ticks", std::move(x_ticks)}}},
      {"y_axis", std::move(y_axis)},
      {"boxes", json::array()},
      {"markers", json::array()},
      {"lines", std::move(lines)},
  };
}

json ExportQuestionnairePlot(const QuestionnaireTally& t) {
  json bars = json::array();
  json charts = json::array();
  auto chart = [&](std::string_view id, std::string_view title,
                   std::span<const std::size_t> counts, auto option_text) {
    json categories = json::array();
    for (std::size_t i = 0; i < counts.size(); ++i) {
      const std::string_view label = option_text(i);
      categories.push_back(label);
      bars.push_back(json{{"chart", id}, {"x", i}, {"label", label},
                          {"count", counts[i]}});
    }
    charts.push_back(json{{"id", id}, {"title", title},
                          {"categories", std::move(categories)}});
  };
  chart("q0", "How do you assess your own hearing ability?", t.q0,
        [](std::size_t i) {
          return OptionText(static_cast<HearingSelfAssessment>(i));
        });
  chart("q5", "How often do you have problems understanding speech on TV?",
        t.q5, [](std::size_t i) {
          return OptionText(static_cast<TvSpeechProblems>(i));
        });
  return json{
      {"layout", "questionnaire"},
      {"title", "Questionnaire answers"},
      {"n", t.n},
      {"problem_share",
       t.problem_share ? json(*t.problem_share) : json(nullptr)},
      {"charts", std::move(charts)},
      {"bars", std::move(bars)},
      {"boxes", json::array()},
      {"markers", json::array()},
      {"lines", json::array()},
  };
}

namespace {

constexpr double kWidth = 960, kHeight = 540;
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 90;

std::string N(double v) { return fmt::format("{:.2f}", v); }

std::string Escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

// Maps data coordinates into a plot rectangle.
struct Frame {
  double x_min, x_max, y_min, y_max;
  double left, top, width, height;
  bool log_x = false;
  bool inverted_y = false;

  double X(double x) const {
    double a = x_min, b = x_max, v = x;
    if (log_x) {
      a = std::log10(a);
      b = std::log10(b);
      v = std::log10(v);
    }
    return left + (b > a ? (v - a) / (b - a) : 0.5) * width;
  }
  double Y(double y) const {
    double f = y_max > y_min ? (y - y_min) / (y_max - y_min) : 0.5;
    if (inverted_y) f = 1.0 - f;
    return top + (1.0 - f) * height;
  }
};

std::string DashAttr(const json& line) {
  return line.value("style", "solid") == "dashed" ? " stroke-dasharray=\"6,4\"" : "";
}

void DrawAxes(std::string& out, const Frame& f, const json& doc) {
  const json& xa = doc.at("x_axis");
  const json& ya = doc.at("y_axis");
  out += fmt::format(
      "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" "
      "stroke=\"black\"/>\n",
      N(f.left), N(f.top), N(f.width), N(f.height));
  for (const json& t : ya.at("ticks")) {
    const double y = f.Y(t.at("y").get<double>());
    out += fmt::format(
        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#dddddd\"/>\n",
        N(f.left), N(y), N(f.left + f.width), N(y));
    out += fmt::format(
        "<text x=\"{}\" y=\"{}\" font-size=\"11\" text-anchor=\"end\">{}</text>\n",
        N(f.left - 4), N(y + 4), Escape(t.at("label").get<std::string>()));
  }
  for (const json& t : xa.at("ticks")) {
    const double x = f.X(t.at("x").get<double>());
    const double y = f.top + f.height + 12;
    out += fmt::format(
        "<text x=\"{}\" y=\"{}\" font-size=\"10\" text-anchor=\"end\" "
        "transform=\"rotate(-45 {} {})\">{}</text>\n",
        N(x), N(y), N(x), N(y), Escape(t.at("label").get<std::string>()));
  }
  out += fmt::format(
      "<text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\" "
      "transform=\"rotate(-90 {} {})\">{}</text>\n",
      N(16), N(f.top + f.height / 2), N(16), N(f.top + f.height / 2),
      Escape(ya.at("label").get<std::string>()));
}

void DrawBoxes(std::string& out, const Frame& f, const json& doc) {
  for (const json& b : doc.at("boxes")) {
    const double x = b.at("x").get<double>();
    const double w = b.at("width").get<double>();
    const std::string color = b.at("color").get<std::string>();
    const double xl = f.X(x - w / 2), xr = f.X(x + w / 2), xc = f.X(x);
    const double q1 = f.Y(b.at("q1").get<double>());
    const double q3 = f.Y(b.at("q3").get<double>());
    const double med = f.Y(b.at("median").get<double>());
    const double wlo = f.Y(b.at("whisker_lo").get<double>());
    const double whi = f.Y(b.at("whisker_hi").get<double>());
    out += fmt::format(
        "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" "
        "stroke=\"{}\"/>\n",
        N(xl), N(std::min(q1, q3)), N(xr - xl), N(std::abs(q1 - q3)), color);
    out += fmt::format(
        "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\" "
        "stroke-width=\"2\"/>\n",
        N(xl), N(med), N(xr), N(med));
    const double cap = (xr - xl) / 4;
    for (const auto& [from, to] : {std::pair{q1, wlo}, std::pair{q3, whi}}) {
      out += fmt::format(
          "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\"/>\n",
          N(xc), N(from), N(xc), N(to), color);
      out += fmt::format(
          "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\"/>\n",
          N(xc - cap), N(to), N(xc + cap), N(to), color);
    }
  }
}

void DrawMarkers(std::string& out, const Frame& f, const json& doc) {
  for (const json& m : doc.at("markers")) {
    const double x = f.X(m.at("x").get<double>());
    const double y = f.Y(m.at("y").get<double>());
    const std::string color = m.at("color").get<std::string>();
    const std::string shape = m.at("shape").get<std::string>();
    if (shape == "circle") {
      out += fmt::format(
          "<circle cx=\"{}\" cy=\"{}\" r=\"4\" fill=\"none\" stroke=\"{}\"/>\n",
          N(x), N(y), color);
      continue;
    }
    const double r = 4;
    if (shape == "cross") {  // upright +
      out += fmt::format(
          "<path d=\"M{} {}H{}M{} {}V{}\" stroke=\"{}\"/>\n", N(x - r), N(y),
          N(x + r), N(x), N(y - r), N(y + r), color);
    } else {  // diagonal x
      out += fmt::format(
          "<path d=\"M{} {}L{} {}M{} {}L{} {}\" stroke=\"{}\" "
          "stroke-width=\"2\"/>\n",
          N(x - r), N(y - r), N(x + r), N(y + r), N(x - r), N(y + r), N(x + r),
          N(y - r), color);
    }
  }
}

void DrawLines(std::string& out, const Frame& f, const json& doc) {
  for (const json& l : doc.at("lines")) {
    std::string d;
    for (const json& p : l.at("points")) {
      d += fmt::format("{}{} {}", d.empty() ? "M" : "L",
                       N(f.X(p.at(0).get<double>())), N(f.Y(p.at(1).get<double>())));
    }
    if (d.empty()) continue;
    out += fmt::format("<path d=\"{}\" fill=\"none\" stroke=\"{}\"{}/>\n", d,
                       l.at("color").get<std::string>(), DashAttr(l));
  }
}

void DrawBars(std::string& out, const json& doc) {
  const json& charts = doc.at("charts");
  const std::size_t k = charts.size();
  const double panel_w = (kWidth - kLeft - kRight) / static_cast<double>(k);
  std::size_t max_count = 1;
  for (const json& b : doc.at("bars")) {
    max_count = std::max(max_count, b.at("count").get<std::size_t>());
  }
  for (std::size_t c = 0; c < k; ++c) {
    const std::string id = charts[c].at("id").get<std::string>();
    const std::size_t n_cat = charts[c].at("categories").size();
    Frame f{-0.5, static_cast<double>(n_cat) - 0.5, 0, static_cast<double>(max_count),
            kLeft + static_cast<double>(c) * panel_w, kTop, panel_w - 30,
            kHeight - kTop - kBottom};
    out += fmt::format(
        "<text x=\"{}\" y=\"{}\" font-size=\"12\" text-anchor=\"middle\">{}</text>\n",
        N(f.left + f.width / 2), N(kTop - 8),
        Escape(charts[c].at("title").get<std::string>()));
    out += fmt::format(
        "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" "
        "stroke=\"black\"/>\n",
        N(f.left), N(f.top), N(f.width), N(f.height));
    for (const json& b : doc.at("bars")) {
      if (b.at("chart") != id) continue;
      const double x = b.at("x").get<double>();
      const double count = b.at("count").get<double>();
      const double xl = f.X(x - 0.35), xr = f.X(x + 0.35);
      out += fmt::format(
          "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"#4a78b5\"/>\n",
          N(xl), N(f.Y(count)), N(xr - xl), N(f.Y(0) - f.Y(count)));
      const double ty = f.top + f.height + 12;
      out += fmt::format(
          "<text x=\"{}\" y=\"{}\" font-size=\"10\" text-anchor=\"end\" "
          "transform=\"rotate(-30 {} {})\">{}</text>\n",
          N(f.X(x)), N(ty), N(f.X(x)), N(ty),
          Escape(b.at("label").get<std::string>()));
    }
  }
}

}  // namespace

std::string RenderSvg(const json& doc) {
  std::string out = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
      "viewBox=\"0 0 {} {}\">\n",
      kWidth, kHeight, kWidth, kHeight);
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out += fmt::format(
      "<text x=\"{}\" y=\"20\" font-size=\"14\" text-anchor=\"middle\">{}</text>\n",
      N(kWidth / 2), Escape(doc.value("title", "")));
  if (doc.contains("bars")) {
    DrawBars(out, doc);
  } else {
    const json& xa = doc.at("x_axis");
    const json& ya = doc.at("y_axis");
    Frame f{xa.at("min").get<double>(),  xa.at("max").get<double>(),
            ya.at("min").get<double>(),  ya.at("max").get<double>(),
            kLeft, kTop, kWidth - kLeft - kRight, kHeight - kTop - kBottom};
    f.log_x = xa.value("scale", "") == "log";
    f.inverted_y = ya.value("inverted", false);
    DrawAxes(out, f, doc);
    DrawLines(out, f, doc);
    DrawBoxes(out, f, doc);
    DrawMarkers(out, f, doc);
  }
  out += "</svg>\n";
  return out;
}

}  // namespace adjustsat::analysis
