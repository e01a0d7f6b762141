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

#ifndef ADJUSTSAT_MANIFEST_H_
#define ADJUSTSAT_MANIFEST_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adjustsat/stimulus.h"

namespace adjustsat::harness {

struct ManifestItem {
  stimulus::ItemSpec spec;
  std::filesystem::path fg_path;
  std::filesystem::path bg_path;
};

struct PlaylistRef {
  std::string item_id;
  bool training = false;
};

// JSON manifest:
// {
//   "target_loudness": -23,
//   "output_dir": "cache",
//   "items": [{"id": "wdr1_oo", "label": "WDR1", "de_method": "OO",
//              "prod_type": "WDR", "content_tags": ["mVO", "noise"],
//              "fg": "stems/wdr1_fg.wav", "bg": "stems/wdr1_bg.wav",
//              "grid": "+12:1:-15;-16:2:-40", "default_ld": 11,
//              "leakage": null}],
//   "playlist": [{"item": "training", "training": true}, {"item": "wdr1_oo"}]
// }
// Relative paths resolve against the manifest's directory.
struct Manifest {
  std::vector<ManifestItem> items;
  std::vector<PlaylistRef> playlist;
  double target_loudness = loudness::kDefaultTargetLufs;
  std::filesystem::path output_dir;

  const ManifestItem& Item(std::string_view id) const;
};

struct ManifestOverrides {
  std::optional<double> target_lufs;
  // Leakage for DS items that do not declare one.
  std::optional<double> leakage_db;
  std::optional<std::filesystem::path> output_dir;
};

// Throws kInvalidManifest for schema violations and playlist errors (unknown
// item ids, training entry not first or not unique).
Manifest ParseManifest(std::string_view text,
                       const std::filesystem::path& base_dir,
                       const ManifestOverrides& overrides = {});
Manifest LoadManifest(const std::filesystem::path& path,
                      const ManifestOverrides& overrides = {});

}  // namespace adjustsat::harness

#endif  // ADJUSTSAT_MANIFEST_H_
