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

#include "adjustsat/version_cache.h"

#include <algorithm>
#include <fmt/format.h>
#include <fstream>
#include <nlohmann/json.hpp>
#include <set>

#include "adjustsat/error.h"
#include "adjustsat/wav.h"

namespace adjustsat::stimulus {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json ToJson(const ItemIndex& index) {
  json versions = json::array();
  for (const VersionSummary& v : index.versions) {
    versions.push_back({{"offset", v.offset},
                        {"file", VersionCache::VersionFileName(v.offset)},
                        {"measured_lufs", v.measured_lufs},
                        {"nominal_ld", v.nominal_ld}});
  }
  return json{{"item_id", index.item_id},
              {"target_lufs", index.target_lufs},
              {"leakage_db", index.leakage_db ? json(*index.leakage_db)
                                              : json(nullptr)},
              {"source_digest", index.source_digest},
              {"grid", index.grid},
              {"default_ld", index.default_ld},
              {"max_achievable_ld", index.max_achievable_ld},
              {"sample_rate", index.sample_rate},
              {"num_frames", index.num_frames},
              {"versions", versions}};
}

ItemIndex FromJson(const json& j) {
  ItemIndex index;
  index.item_id = j.at("item_id").get<std::string>();
  index.target_lufs = j.at("target_lufs").get<double>();
  if (!j.at("leakage_db").is_null()) {
    index.leakage_db = j.at("leakage_db").get<double>();
  }
  index.source_digest = j.at("source_digest").get<std::string>();
  index.grid = j.at("grid").get<std::string>();
  index.default_ld = j.at("default_ld").get<double>();
  index.max_achievable_ld = j.at("max_achievable_ld").get<double>();
  index.sample_rate = j.at("sample_rate").get<int>();
  index.num_frames = j.at("num_frames").get<std::size_t>();
  for (const json& v : j.at("versions")) {
    index.versions.push_back(VersionSummary{v.at("offset").get<double>(),
                                            v.at("nominal_ld").get<double>(),
                                            v.at("measured_lufs").get<double>()});
  }
  return index;
}

bool SameKey(const ItemIndex& index, const ItemSpec& item,
             const std::string& digest) {
  return index.item_id == item.id && index.target_lufs == item.target_loudness &&
         index.leakage_db == item.leakage_db && index.source_digest == digest &&
         index.grid == FormatGrid(item.grid) &&
         (!item.default_ld || index.default_ld == *item.default_ld);
}

void WriteFileAtomically(const fs::path& path, const std::string& contents) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
    out << contents;
    if (!out) throw Error(ErrorCode::kIo, "short write to " + tmp.string());
  }
  fs::rename(tmp, path);
}

}  // namespace

VersionCache::VersionCache(fs::path root) : root_(std::move(root)) {}

std::string VersionCache::VersionFileName(double offset) {
  return fmt::format("v{:+.1f}.wav", offset == 0.0 ? 0.0 : offset);
}

fs::path VersionCache::ItemDir(const std::string& item_id) const {
  return root_ / item_id;
}

fs::path VersionCache::VersionPath(const std::string& item_id,
                                   double offset) const {
  return ItemDir(item_id) / VersionFileName(offset);
}

fs::path VersionCache::IndexPath(const std::string& item_id) const {
  return ItemDir(item_id) / "index.json";
}

std::optional<ItemIndex> VersionCache::LoadIndex(
    const std::string& item_id) const {
  std::ifstream in(IndexPath(item_id));
  if (!in) return std::nullopt;
  try {
    return FromJson(json::parse(in));
  } catch (const json::exception&) {
    return std::nullopt;  // a corrupt index is treated as absent
  }
}

bool VersionCache::IsUpToDate(const ItemSpec& item,
                              const std::string& source_digest) const {
  const std::optional<ItemIndex> index = LoadIndex(item.id);
  return index && SameKey(*index, item, source_digest) &&
         HasCompleteSet(item);
}

bool VersionCache::HasCompleteSet(const ItemSpec& item) const {
  const std::optional<ItemIndex> index = LoadIndex(item.id);
  if (!index || index->target_lufs != item.target_loudness ||
      index->leakage_db != item.leakage_db ||
      index->grid != FormatGrid(item.grid)) {
    return false;
  }
  std::set<double> listed;
  for (const VersionSummary& v : index->versions) listed.insert(v.offset);
  for (double offset : item.grid.offsets()) {
    if (!listed.contains(offset) || !fs::exists(VersionPath(item.id, offset))) {
      return false;
    }
  }
  return true;
}

std::mutex& VersionCache::KeyMutex(const std::string& key) {
  std::lock_guard lock(key_mutexes_guard_);
  auto& slot = key_mutexes_[key];
  if (!slot) slot = std::make_unique<std::mutex>();
  return *slot;
}

void VersionCache::WriteIndex(const ItemIndex& index) {
  std::lock_guard lock(KeyMutex(index.item_id + "/index"));
  WriteFileAtomically(IndexPath(index.item_id), ToJson(index).dump(2) + "\n");
}

PrepareStats VersionCache::Prepare(const ItemSpec& item,
                                   const StemPair& ingested,
                                   const std::string& source_digest,
                                   const RenderOptions& options) {
  ValidateItem(item);
  {
    std::set<std::string> names;
    for (double offset : item.grid.offsets()) {
      if (!names.insert(VersionFileName(offset)).second) {
        throw Error(ErrorCode::kInvalidItem,
                    fmt::format("item {}: offsets closer than 0.1 LU collide "
                                "in the cache naming ({})",
                                item.id, VersionFileName(offset)));
      }
    }
  }
  if (IsUpToDate(item, source_digest)) {
    return PrepareStats{0, item.grid.size()};
  }

  const double default_ld = ResolveDefaultLd(item, ingested);
  const SeparatedStems separated =
      SimulateDs(ingested, LeakageModel::FromOptional(item.leakage_db));
  fs::create_directories(ItemDir(item.id));

  // Reuse entries of an index written under the same key.
  std::map<double, VersionSummary> kept;
  if (std::optional<ItemIndex> old = LoadIndex(item.id);
      old && SameKey(*old, item, source_digest)) {
    for (const VersionSummary& v : old->versions) {
      if (fs::exists(VersionPath(item.id, v.offset))) kept[v.offset] = v;
    }
  }

  RenderOptions render_options = options;
  render_options.skip = [&kept](double offset) { return kept.contains(offset); };
  const std::vector<VersionSummary> rendered = RenderVersions(
      item, default_ld, separated.estimate,
      [&](RenderedVersion&& v) {
        const fs::path path = VersionPath(item.id, v.offset);
        std::lock_guard lock(KeyMutex(path.string()));
        const std::vector<std::uint8_t> bytes = EncodeWav(v.audio);
        WriteFileAtomically(path, std::string(bytes.begin(), bytes.end()));
      },
      render_options);

  ItemIndex index;
  index.item_id = item.id;
  index.target_lufs = item.target_loudness;
  index.leakage_db = item.leakage_db;
  index.source_digest = source_digest;
  index.grid = FormatGrid(item.grid);
  index.default_ld = default_ld;
  index.max_achievable_ld =
      MaxAchievableLd(separated, item.grid, item.target_loudness);
  index.sample_rate = ingested.fg.sample_rate();
  index.num_frames = ingested.fg.num_frames();
  std::map<double, VersionSummary> all = kept;
  for (const VersionSummary& v : rendered) all[v.offset] = v;
  for (auto it = all.rbegin(); it != all.rend(); ++it) {
    index.versions.push_back(it->second);
  }
  WriteIndex(index);
  return PrepareStats{rendered.size(), kept.size()};
}

}  // namespace adjustsat::stimulus
