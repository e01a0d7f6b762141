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

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "adjustsat/commands.h"
#include "adjustsat/error.h"
#include "adjustsat/event_log.h"

namespace {

namespace fs = std::filesystem;
using adjustsat::harness::ManifestOverrides;

struct GlobalFlags {
  std::optional<std::string> manifest;
  std::optional<std::string> out;
  std::optional<double> target_lufs;
  std::optional<double> leakage_db;
  std::string bind = "127.0.0.1:8080";

  ManifestOverrides Overrides() const {
    return ManifestOverrides{target_lufs, leakage_db, std::nullopt};
  }
  fs::path RequireManifest() const {
    if (!manifest) {
      throw adjustsat::Error(adjustsat::ErrorCode::kInvalidArgument,
                             "--manifest is required");
    }
    return *manifest;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dialogue-enhancement listening test toolkit"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(adjustsat::session::kToolkitVersion));

  GlobalFlags g;
  app.add_option("--manifest", g.manifest, "Study manifest (JSON)");
  app.add_option("--out", g.out,
                 "Output directory (serve: results dir, analyze: reports, "
                 "simulate-ds: estimated stems)");
  app.add_option("--target-lufs", g.target_lufs, "Override the leveling target");
  app.add_option("--leakage-db", g.leakage_db,
                 "Leakage for DS items without one (<= 0 dB)");
  app.add_option("--bind", g.bind, "host:port for serve")->capture_default_str();

  auto* prepare = app.add_subcommand("prepare", "Render and cache all versions");
  std::size_t threads = 0;
  prepare->add_option("--threads", threads, "Render threads (0: all cores)");

  auto* measure = app.add_subcommand("measure", "Integrated loudness of a WAV file");
  std::string wav;
  measure->add_option("wav", wav, "WAV file")->required();

  auto* serve = app.add_subcommand("serve", "Run the session service");
  std::optional<std::string> static_root;
  serve->add_option("--static", static_root, "UI build directory");

  auto* analyze = app.add_subcommand("analyze", "Statistics and figure documents");
  std::optional<std::string> results_dir;
  bool svg = false;
  bool keep_participants = false;
  analyze->add_option("--results", results_dir,
                      "Results directory (default: $ADJUSTSAT_RESULTS_DIR or results)");
  analyze->add_flag("--svg", svg, "Also write SVG renderings");
  analyze->add_flag("--keep-participants", keep_participants,
                    "Only drop invalid trials, never whole participants");

  auto* simulate = app.add_subcommand("simulate-ds",
                                      "Leaky separation estimates and LD ceiling");
  std::string fg, bg;
  std::string grid = "+12:1:-15;-16:2:-40";
  bool no_leakage = false;
  simulate->add_option("--fg", fg, "Foreground stem")->required();
  simulate->add_option("--bg", bg, "Background stem")->required();
  simulate->add_option("--grid", grid, "Offset grid")->capture_default_str();
  simulate->add_flag("--no-leakage", no_leakage, "Disable leakage");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*prepare) {
      adjustsat::harness::PrepareOptions options{g.RequireManifest(), g.Overrides(),
                                                 threads};
      if (g.out) options.overrides.output_dir = fs::path(*g.out);
      const auto report = adjustsat::harness::RunPrepare(options, std::cout);
      return report.failures() == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
    }
    if (*measure) {
      std::cout << adjustsat::harness::MeasureFile(wav);
      return EXIT_SUCCESS;
    }
    if (*serve) {
      adjustsat::harness::ServeOptions options;
      options.manifest = g.RequireManifest();
      options.overrides = g.Overrides();
      options.results_dir = adjustsat::harness::ResolveResultsDir(
          g.out ? std::optional<fs::path>(*g.out) : std::nullopt);
      options.bind = g.bind;
      if (static_root) options.static_root = fs::path(*static_root);
      adjustsat::harness::RunServe(options, std::cout);
      return EXIT_SUCCESS;
    }
    if (*analyze) {
      adjustsat::harness::AnalyzeOptions options;
      options.results_dir = adjustsat::harness::ResolveResultsDir(
          results_dir ? std::optional<fs::path>(*results_dir) : std::nullopt);
      options.out_dir = g.out ? fs::path(*g.out) : fs::path("analysis");
      if (g.manifest) options.manifest = fs::path(*g.manifest);
      options.overrides = g.Overrides();
      options.svg = svg;
      if (keep_participants) options.filter.participant_threshold.reset();
      const auto report = adjustsat::harness::RunAnalyze(options);
      std::cout << report.summary;
      for (const fs::path& p : report.documents) {
        std::cout << "wrote " << p.string() << "\n";
      }
      return EXIT_SUCCESS;
    }
    if (*simulate) {
      adjustsat::harness::SimulateDsOptions options;
      options.fg = fg;
      options.bg = bg;
      options.out_dir = g.out ? fs::path(*g.out) : fs::path("ds_estimates");
      options.leakage_db =
          no_leakage ? std::nullopt
                     : std::optional<double>(g.leakage_db.value_or(
                           adjustsat::stimulus::kDefaultLeakageDb));
      options.grid = grid;
      if (g.target_lufs) options.target_lufs = *g.target_lufs;
      const auto report = adjustsat::harness::RunSimulateDs(options);
      std::cout << adjustsat::harness::FormatSimulateDs(report, options);
      return EXIT_SUCCESS;
    }
  } catch (const adjustsat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_FAILURE;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return EXIT_FAILURE;
  }
  return EXIT_FAILURE;
}
