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

#ifndef ADJUSTSAT_COMMANDS_H_
#define ADJUSTSAT_COMMANDS_H_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "adjustsat/analysis.h"
#include "adjustsat/loudness.h"
#include "adjustsat/manifest.h"
#include "adjustsat/version_cache.h"
#include "adjustsat/wav.h"

namespace adjustsat::harness {

inline constexpr std::string_view kResultsDirEnv = "ADJUSTSAT_RESULTS_DIR";
inline constexpr std::string_view kDefaultResultsDir = "results";

// An explicit flag wins, then ADJUSTSAT_RESULTS_DIR, then "results".
std::filesystem::path ResolveResultsDir(
    const std::optional<std::filesystem::path>& flag);

struct PrepareOptions {
  std::filesystem::path manifest;
  ManifestOverrides overrides;
  std::size_t threads = 0;
};

struct ItemPrepareReport {
  std::string item_id;
  std::optional<std::string> error;
  stimulus::PrepareStats stats;
  std::size_t versions = 0;
  double default_ld = 0.0;
  double max_achievable_ld = 0.0;
};

struct PrepareReport {
  std::filesystem::path cache_root;
  std::vector<ItemPrepareReport> items;

  std::size_t failures() const;
};

// Renders every manifest item into the cache. Item failures are collected,
// not thrown; manifest errors throw. Progress goes to `log`.
PrepareReport RunPrepare(const PrepareOptions& options, std::ostream& log);

// "-23.0 LUFS" or "below gate", then file metadata lines.
std::string MeasureFile(const std::filesystem::path& path);
std::string FormatMeasurement(const std::filesystem::path& path,
                              const WavInfo& info,
                              const loudness::LoudnessReading& reading);

struct ServeOptions {
  std::filesystem::path manifest;
  ManifestOverrides overrides;
  std::filesystem::path results_dir;
  std::string bind = "127.0.0.1:8080";
  std::optional<std::filesystem::path> static_root;
};

// Blocks until SIGINT/SIGTERM. Throws kCacheMissing, kAddressInUse.
void RunServe(const ServeOptions& options, std::ostream& log);

struct AnalyzeOptions {
  std::filesystem::path results_dir;
  std::filesystem::path out_dir;
  // When given, per-item LD maxima are read from its prepared cache.
  std::optional<std::filesystem::path> manifest;
  ManifestOverrides overrides;
  bool svg = false;
  analysis::FilterOptions filter;
};

struct AnalyzeReport {
  std::string summary;
  std::vector<std::filesystem::path> documents;
};

inline constexpr std::string_view kLdFigureFile = "ld_figure.json";
inline constexpr std::string_view kSatisfactionFigureFile = "satisfaction_figure.json";
inline constexpr std::string_view kAudiogramFigureFile = "audiogram_figure.json";
inline constexpr std::string_view kQuestionnaireFigureFile = "questionnaire_figure.json";
inline constexpr std::string_view kSummaryFile = "summary.txt";

// Reads results.csv (required), audiograms.csv and questionnaire.csv
// (optional) from the results dir and writes the four figure documents and
// summary.txt. Throws kNoResults when there is nothing valid to analyze.
AnalyzeReport RunAnalyze(const AnalyzeOptions& options);

// Text summary of validity-filtered results. `all` is the unfiltered input.
std::string SummarizeResults(std::span<const TrialResult> all,
                             const analysis::FilterResult& filtered);

struct SimulateDsOptions {
  std::filesystem::path fg;
  std::filesystem::path bg;
  std::filesystem::path out_dir;
  std::optional<double> leakage_db = stimulus::kDefaultLeakageDb;  // none: off
  std::string grid = "+12:1:-15;-16:2:-40";
  double target_lufs = loudness::kDefaultTargetLufs;
};

struct SimulateDsReport {
  std::filesystem::path fg_est;
  std::filesystem::path bg_est;
  double default_ld = 0.0;
  double min_offset = 0.0;
  double max_achievable_ld = 0.0;
  // LD the grid end would give without leakage.
  double leakage_free_ld = 0.0;
};

// Writes fg_est.wav and bg_est.wav and reports the LD ceiling of the grid.
SimulateDsReport RunSimulateDs(const SimulateDsOptions& options);
std::string FormatSimulateDs(const SimulateDsReport& report,
                             const SimulateDsOptions& options);

}  // namespace adjustsat::harness

#endif  // ADJUSTSAT_COMMANDS_H_
