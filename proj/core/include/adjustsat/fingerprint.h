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

#ifndef ADJUSTSAT_FINGERPRINT_H_
#define ADJUSTSAT_FINGERPRINT_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace adjustsat {

// 64-bit FNV-1a, used for cache keys and playlist hashes. Not cryptographic.
class Fingerprint {
 public:
  Fingerprint& Add(std::string_view bytes);
  Fingerprint& AddFile(const std::filesystem::path& path);
  std::uint64_t value() const noexcept { return hash_; }
  std::string hex() const;

 private:
  std::uint64_t hash_ = 0xcbf29ce484222325ULL;
};

}  // namespace adjustsat

#endif  // ADJUSTSAT_FINGERPRINT_H_
