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

#include "adjustsat/commands.h"

#include <cstdlib>
#include <map>

#include <fmt/format.h>

#include "adjustsat/error.h"
#include "adjustsat/fingerprint.h"
#include "adjustsat/http_server.h"
#include "adjustsat/plot.h"
#include "adjustsat/results_io.h"
#include "adjustsat/session_service.h"

namespace adjustsat::harness {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string Lu(double v) { return fmt::format("{:.2f}", v == 0.0 ? 0.0 : v); }

std::string ChannelText(const WavInfo& info) {
  switch (info.num_channels) {
    case 1: return "1 (mono)";
    case 2: return "2 (stereo)";
    default: return std::to_string(info.num_channels);
  }
}

void WriteDocument(const fs::path& dir, std::string_view name, const json& doc,
                   bool svg, std::vector<fs::path>& written) {
  const fs::path path = dir / name;
  analysis::WriteTextFileAtomic(path, doc.dump(2) + "\n");
  written.push_back(path);
  if (svg) {
    fs::path svg_path = path;
    svg_path.replace_extension(".svg");
    analysis::WriteTextFileAtomic(svg_path, analysis::RenderSvg(doc));
    written.push_back(svg_path);
  }
}

// Highest reachable LD per by-item group key from a prepared cache.
analysis::PlotReferences MaximaFromCache(const Manifest& manifest) {
  analysis::PlotReferences refs;
  const stimulus::VersionCache cache(manifest.output_dir);
  for (const ManifestItem& item : manifest.items) {
    const auto index = cache.LoadIndex(item.spec.id);
    if (!index) continue;
    const std::string key =
        item.spec.label + " " + std::string(stimulus::DeMethodName(item.spec.de_method));
    auto [it, inserted] = refs.max_ld.emplace(key, index->max_achievable_ld);
    if (!inserted) it->second = std::max(it->second, index->max_achievable_ld);
  }
  return refs;
}

// "all 12.00 LU, OO 12.00 LU, DS 11.00 LU" for one statistic.
template <class Get>
std::string ByMethodLine(const analysis::Aggregation& all,
                         const analysis::Aggregation& methods, Get get,
                         std::string_view unit) {
  std::string line = fmt::format("all {}{}", Lu(get(all.groups.front())), unit);
  for (std::string_view m : {"OO", "DS"}) {
    const analysis::GroupStats* g = methods.Find(m);
    line += g ? fmt::format(", {} {}{}", m, Lu(get(*g)), unit)
              : fmt::format(", {} n/a", m);
  }
  return line;
}

}  // namespace

fs::path ResolveResultsDir(const std::optional<fs::path>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv(std::string(kResultsDirEnv).c_str());
      env && *env) {
    return env;
  }
  return fs::path(kDefaultResultsDir);
}

std::size_t PrepareReport::failures() const {
  std::size_t n = 0;
  for (const ItemPrepareReport& r : items) n += r.error ? 1 : 0;
  return n;
}

PrepareReport RunPrepare(const PrepareOptions& options, std::ostream& log) {
  const Manifest manifest = LoadManifest(options.manifest, options.overrides);
  PrepareReport report;
  report.cache_root = manifest.output_dir;
  stimulus::VersionCache cache(manifest.output_dir);
  stimulus::RenderOptions render;
  render.threads = options.threads;

  for (const ManifestItem& item : manifest.items) {
    ItemPrepareReport r;
    r.item_id = item.spec.id;
    try {
      stimulus::StemPair stems = stimulus::MakeStemPair(
          ReadWav(item.fg_path).clip, ReadWav(item.bg_path).clip);
      Fingerprint digest;
      digest.AddFile(item.fg_path).Add("|").AddFile(item.bg_path);
      r.stats = cache.Prepare(item.spec, stems, digest.hex(), render);
      const auto index = cache.LoadIndex(item.spec.id);
      if (!index) throw Error(ErrorCode::kIo, "index was not written");
      r.versions = index->versions.size();
      r.default_ld = index->default_ld;
      r.max_achievable_ld = index->max_achievable_ld;
      log << fmt::format(
          "item {}: {} versions ({} rendered, {} up to date), default LD {} LU, "
          "max LD {} LU\n",
          r.item_id, r.versions, r.stats.rendered, r.stats.skipped,
          Lu(r.default_ld), Lu(r.max_achievable_ld));
    } catch (const std::exception& e) {
      r.error = e.what();
      log << fmt::format("item {}: FAILED: {}\n", r.item_id, e.what());
    }
    report.items.push_back(std::move(r));
  }
  log << fmt::format("prepared {} of {} items into {}\n",
                     report.items.size() - report.failures(), report.items.size(),
                     report.cache_root.string());
  return report;
}

std::string FormatMeasurement(const fs::path& path, const WavInfo& info,
                              const loudness::LoudnessReading& reading) {
  std::string out = reading.lufs ? fmt::format("{:.1f} LUFS\n", *reading.lufs)
                                 : std::string("below gate\n");
  out += fmt::format("file: {}\n", path.string());
  out += fmt::format("format: {}\n", SampleFormatName(info.format));
  out += fmt::format("sample rate: {} Hz\n", info.sample_rate);
  out += fmt::format("channels: {}\n", ChannelText(info));
  out += fmt::format("duration: {:.3f} s\n",
                     static_cast<double>(info.num_frames) / info.sample_rate);
  out += fmt::format("gated blocks: {}\n", reading.gated_block_count);
  return out;
}

std::string MeasureFile(const fs::path& path) {
  const WavFile wav = ReadWav(path);
  return FormatMeasurement(path, wav.info, loudness::IntegratedLoudness(wav.clip));
}

void RunServe(const ServeOptions& options, std::ostream& log) {
  const Manifest manifest = LoadManifest(options.manifest, options.overrides);
  const stimulus::VersionCache cache(manifest.output_dir);
  auto playlist = BuildPlaylist(manifest, cache);
  fs::create_directories(options.results_dir);
  SessionService service(playlist, cache, ServiceConfig{options.results_dir});
  HttpServer server(service, ServerOptions{options.bind, manifest.output_dir,
                                           options.static_root});
  log << fmt::format("serving {} items on http://{} (results in {})\n",
                     playlist->size(), server.address(),
                     options.results_dir.string())
      << std::flush;
  server.Run(/*handle_signals=*/true);
  log << fmt::format("stopped after {} completed session(s)\n",
                     service.completed_sessions());
}

std::string SummarizeResults(std::span<const TrialResult> all,
                             const analysis::FilterResult& filtered) {
  std::map<std::string, bool> participants;
  for (const TrialResult& r : all) participants[r.participant_id] = true;
  const auto agg_all = analysis::Aggregate(filtered.valid, analysis::Grouping::kAll);
  const auto methods =
      analysis::Aggregate(filtered.valid, analysis::Grouping::kByDeMethod);
  const auto presented = analysis::Aggregate(all, analysis::Grouping::kAll);

  std::string out;
  out += fmt::format("trials: {} from {} participant(s)\n", all.size(),
                     participants.size());
  out += fmt::format("valid trials: {}\n", filtered.valid.size());
  out += fmt::format("discarded trials: {}\n", filtered.discarded.size());
  out += fmt::format("discarded participants: {}", filtered.discarded_participants.size());
  for (const std::string& pid : filtered.discarded_participants) out += " " + pid;
  out += "\n";
  out += fmt::format("mean default LD {:.1f} LU\n", presented.mean_default_ld);

  using G = analysis::GroupStats;
  out += "chosen LD median: " +
         ByMethodLine(agg_all, methods, [](const G& g) { return g.ld.median; }, " LU") +
         "\n";
  out += "chosen LD IQR: " +
         ByMethodLine(agg_all, methods, [](const G& g) { return g.ld.iqr; }, " LU") +
         "\n";
  out += "chosen LD mean: " +
         ByMethodLine(agg_all, methods, [](const G& g) { return g.ld.mean; }, " LU") +
         "\n";
  out += "satisfaction median: " +
         ByMethodLine(agg_all, methods,
                      [](const G& g) { return g.satisfaction.median; }, "") +
         "\n";
  out += "satisfaction IQR: " +
         ByMethodLine(agg_all, methods, [](const G& g) { return g.satisfaction.iqr; },
                      "") +
         "\n";
  out += "satisfaction mean: " +
         ByMethodLine(agg_all, methods,
                      [](const G& g) { return g.satisfaction.mean; }, "") +
         "\n";
  const G* oo = methods.Find("OO");
  const G* ds = methods.Find("DS");
  if (oo && ds) {
    out += fmt::format("OO-DS median gap {} LU\n", Lu(oo->ld.median - ds->ld.median));
  } else {
    out += "OO-DS median gap n/a\n";
  }
  return out;
}

AnalyzeReport RunAnalyze(const AnalyzeOptions& options) {
  const fs::path results_csv = options.results_dir / "results.csv";
  if (!fs::exists(results_csv)) {
    throw Error(ErrorCode::kNoResults, "no results file at " + results_csv.string());
  }
  std::vector<TrialResult> results;
  try {
    results = analysis::ReadResultsCsv(results_csv);
  } catch (const Error& e) {
    throw Error(e.code(), results_csv.string() + ": " + e.what());
  }
  if (results.empty()) {
    throw Error(ErrorCode::kNoResults, results_csv.string() + " has no rows");
  }
  const analysis::FilterResult filtered =
      analysis::ValidityFilter(results, options.filter);
  if (filtered.valid.empty()) {
    throw Error(ErrorCode::kNoResults, "every result was discarded as invalid");
  }

  std::vector<analysis::Audiogram> audiograms;
  if (fs::exists(options.results_dir / "audiograms.csv")) {
    audiograms = analysis::ReadAudiogramCsv(options.results_dir / "audiograms.csv");
  }
  std::vector<analysis::QuestionnaireResponse> responses;
  if (fs::exists(options.results_dir / "questionnaire.csv")) {
    responses =
        analysis::ReadQuestionnaireCsv(options.results_dir / "questionnaire.csv");
  }

  analysis::PlotReferences refs;
  if (options.manifest) {
    refs = MaximaFromCache(LoadManifest(*options.manifest, options.overrides));
  }

  fs::create_directories(options.out_dir);
  AnalyzeReport report;
  const analysis::Aggregation figure = analysis::FigureStats(filtered.valid);
  WriteDocument(options.out_dir, kLdFigureFile,
                analysis::ExportPlotData(figure, analysis::PlotLayout::kLdFigure, refs),
                options.svg, report.documents);
  WriteDocument(options.out_dir, kSatisfactionFigureFile,
                analysis::ExportPlotData(figure,
                                         analysis::PlotLayout::kSatisfactionFigure),
                options.svg, report.documents);
  WriteDocument(options.out_dir, kAudiogramFigureFile,
                analysis::ExportAudiogramPlot(analysis::SummarizeAudiograms(audiograms)),
                options.svg, report.documents);
  WriteDocument(options.out_dir, kQuestionnaireFigureFile,
                analysis::ExportQuestionnairePlot(analysis::TallyQuestionnaires(responses)),
                options.svg, report.documents);

  report.summary = SummarizeResults(results, filtered);
  const fs::path summary_path = options.out_dir / kSummaryFile;
  analysis::WriteTextFileAtomic(summary_path, report.summary);
  report.documents.push_back(summary_path);
  return report;
}

SimulateDsReport RunSimulateDs(const SimulateDsOptions& options) {
  const stimulus::LdGrid grid = stimulus::ParseGrid(options.grid);
  const stimulus::StemPair stems = stimulus::MakeStemPair(
      ReadWav(options.fg).clip, ReadWav(options.bg).clip);
  const stimulus::SeparatedStems separated = stimulus::SimulateDs(
      stems, stimulus::LeakageModel::FromOptional(options.leakage_db));

  SimulateDsReport report;
  fs::create_directories(options.out_dir);
  report.fg_est = options.out_dir / "fg_est.wav";
  report.bg_est = options.out_dir / "bg_est.wav";
  WriteWav(report.fg_est, separated.estimate.fg);
  WriteWav(report.bg_est, separated.estimate.bg);

  report.default_ld = stimulus::ComputeLd(stems);
  report.min_offset = grid.min_offset();
  report.max_achievable_ld =
      stimulus::MaxAchievableLd(separated, grid, options.target_lufs);
  report.leakage_free_ld = report.default_ld - report.min_offset;
  return report;
}

std::string FormatSimulateDs(const SimulateDsReport& r,
                             const SimulateDsOptions& options) {
  std::string out;
  out += fmt::format("leakage: {}\n", options.leakage_db
                                          ? fmt::format("{} dB", *options.leakage_db)
                                          : std::string("off"));
  out += fmt::format("wrote {}\n", r.fg_est.string());
  out += fmt::format("wrote {}\n", r.bg_est.string());
  out += fmt::format("default LD: {} LU\n", Lu(r.default_ld));
  out += fmt::format("grid end: {:+.1f} LU\n", r.min_offset);
  out += fmt::format("max achievable LD: {} LU\n", Lu(r.max_achievable_ld));
  out += fmt::format("leakage-free max LD: {} LU\n", Lu(r.leakage_free_ld));
  return out;
}

}  // namespace adjustsat::harness
