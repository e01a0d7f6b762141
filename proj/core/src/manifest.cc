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

#include "adjustsat/manifest.h"

#include <fmt/format.h>
#include <fstream>
#include <nlohmann/json.hpp>
#include <set>
#include <sstream>

#include "adjustsat/error.h"

namespace adjustsat::harness {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

[[noreturn]] void Invalid(const std::string& message) {
  throw Error(ErrorCode::kInvalidManifest, message);
}

fs::path Resolve(const fs::path& base, const std::string& p) {
  fs::path path(p);
  return path.is_absolute() ? path : base / path;
}

ManifestItem ParseItem(const json& j, const fs::path& base,
                       double target_lufs,
                       std::optional<double> default_leakage) {
  ManifestItem item;
  stimulus::ItemSpec& spec = item.spec;
  spec.id = j.at("id").get<std::string>();
  spec.label = j.value("label", spec.id);
  spec.de_method = stimulus::ParseDeMethod(j.at("de_method").get<std::string>());
  spec.prod_type = stimulus::ParseProdType(j.at("prod_type").get<std::string>());
  for (const json& tag : j.value("content_tags", json::array())) {
    spec.content_tags.insert(stimulus::ParseContentTag(tag.get<std::string>()));
  }
  spec.grid = stimulus::ParseGrid(j.at("grid").get<std::string>());
  if (j.contains("default_ld") && !j.at("default_ld").is_null()) {
    spec.default_ld = j.at("default_ld").get<double>();
  }
  spec.target_loudness = j.value("target_loudness", target_lufs);
  if (j.contains("leakage") && !j.at("leakage").is_null()) {
    spec.leakage_db = j.at("leakage").get<double>();
  } else if (spec.de_method == stimulus::DeMethod::kDs) {
    spec.leakage_db = default_leakage.value_or(stimulus::kDefaultLeakageDb);
  }
  item.fg_path = Resolve(base, j.at("fg").get<std::string>());
  item.bg_path = Resolve(base, j.at("bg").get<std::string>());
  stimulus::ValidateItem(spec);
  return item;
}

}  // namespace

const ManifestItem& Manifest::Item(std::string_view id) const {
  for (const ManifestItem& item : items) {
    if (item.spec.id == id) return item;
  }
  Invalid(fmt::format("unknown item '{}'", id));
}

Manifest ParseManifest(std::string_view text, const fs::path& base_dir,
                       const ManifestOverrides& overrides) {
  Manifest m;
  try {
    const json j = json::parse(text);
    m.target_loudness = overrides.target_lufs.value_or(
        j.value("target_loudness", loudness::kDefaultTargetLufs));
    m.output_dir = overrides.output_dir.value_or(
        Resolve(base_dir, j.value("output_dir", std::string("cache"))));
    std::set<std::string> ids;
    for (const json& item : j.at("items")) {
      ManifestItem parsed =
          ParseItem(item, base_dir, m.target_loudness, overrides.leakage_db);
      if (overrides.target_lufs) parsed.spec.target_loudness = *overrides.target_lufs;
      if (!ids.insert(parsed.spec.id).second) {
        Invalid("duplicate item id '" + parsed.spec.id + "'");
      }
      m.items.push_back(std::move(parsed));
    }
    for (const json& entry : j.at("playlist")) {
      PlaylistRef ref;
      if (entry.is_string()) {
        ref.item_id = entry.get<std::string>();
      } else {
        ref.item_id = entry.at("item").get<std::string>();
        ref.training = entry.value("training", false);
      }
      if (!ids.contains(ref.item_id)) {
        Invalid("playlist references undeclared item '" + ref.item_id + "'");
      }
      m.playlist.push_back(std::move(ref));
    }
  } catch (const json::exception& e) {
    Invalid(e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInvalidManifest) throw;
    Invalid(e.what());
  }

  if (m.playlist.empty()) Invalid("playlist is empty");
  if (!m.playlist.front().training) Invalid("first playlist entry must be training");
  for (std::size_t i = 1; i < m.playlist.size(); ++i) {
    if (m.playlist[i].training) {
      Invalid("only the first playlist entry may be a training entry");
    }
  }
  return m;
}

Manifest LoadManifest(const fs::path& path, const ManifestOverrides& overrides) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kUnreadableFile, "cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return ParseManifest(buf.str(), path.parent_path(), overrides);
}

}  // namespace adjustsat::harness
