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

#ifndef ADJUSTSAT_VERSION_CACHE_H_
#define ADJUSTSAT_VERSION_CACHE_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "adjustsat/stimulus.h"

namespace adjustsat::stimulus {

// Per-item record written next to the rendered versions as index.json.
struct ItemIndex {
  std::string item_id;
  double target_lufs = 0.0;
  std::optional<double> leakage_db;
  std::string source_digest;
  std::string grid;
  double default_ld = 0.0;
  double max_achievable_ld = 0.0;
  int sample_rate = 0;
  std::size_t num_frames = 0;
  std::vector<VersionSummary> versions;  // grid order

  double duration_ms() const {
    return sample_rate > 0 ? 1000.0 * num_frames / sample_rate : 0.0;
  }
};

struct PrepareStats {
  std::size_t rendered = 0;
  std::size_t skipped = 0;
};

// Looks up whether an item's versions are ready; sessions refuse to start
// without them.
class VersionLookup {
 public:
  virtual ~VersionLookup() = default;
  virtual bool HasCompleteSet(const ItemSpec& item) const = 0;
};

// On-disk store of rendered versions:
//   <root>/<item_id>/v<offset, signed, 1 decimal>.wav   (24-bit PCM)
//   <root>/<item_id>/index.json
// Entries are keyed by (item id, offset, target, leakage) plus a digest of
// the source stems; anything else invalidates the item.
class VersionCache : public VersionLookup {
 public:
  explicit VersionCache(std::filesystem::path root);

  const std::filesystem::path& root() const noexcept { return root_; }

  // "v+1.0.wav", "v+0.0.wav", "v-0.8.wav"
  static std::string VersionFileName(double offset);
  std::filesystem::path ItemDir(const std::string& item_id) const;
  std::filesystem::path VersionPath(const std::string& item_id,
                                    double offset) const;
  std::filesystem::path IndexPath(const std::string& item_id) const;

  std::optional<ItemIndex> LoadIndex(const std::string& item_id) const;

  // True when an index with this item's target, leakage, grid and digest
  // lists every grid offset and every file exists.
  bool IsUpToDate(const ItemSpec& item, const std::string& source_digest) const;

  bool HasCompleteSet(const ItemSpec& item) const override;

  // Renders and stores all missing versions of `item`. `ingested` are the
  // stems as read from disk; DS items are separated here with the item's
  // leakage. Files already present under a matching key are not re-rendered.
  PrepareStats Prepare(const ItemSpec& item, const StemPair& ingested,
                       const std::string& source_digest,
                       const RenderOptions& options = {});

 private:
  std::mutex& KeyMutex(const std::string& key);
  void WriteIndex(const ItemIndex& index);

  std::filesystem::path root_;
  std::mutex key_mutexes_guard_;
  std::map<std::string, std::unique_ptr<std::mutex>> key_mutexes_;
};

}  // namespace adjustsat::stimulus

#endif  // ADJUSTSAT_VERSION_CACHE_H_
