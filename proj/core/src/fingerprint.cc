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

#include "adjustsat/fingerprint.h"

#include <array>
#include <fmt/format.h>
#include <fstream>

#include "adjustsat/error.h"

namespace adjustsat {

Fingerprint& Fingerprint::Add(std::string_view bytes) {
  for (unsigned char c : bytes) {
    hash_ ^= c;
    hash_ *= 0x100000001b3ULL;
  }
  return *this;
}

Fingerprint& Fingerprint::AddFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kUnreadableFile, "cannot open " + path.string());
  std::array<char, 1 << 16> buf;
  while (in) {
    in.read(buf.data(), buf.size());
    Add(std::string_view(buf.data(), static_cast<std::size_t>(in.gcount())));
  }
  return *this;
}

std::string Fingerprint::hex() const { return fmt::format("{:016x}", hash_); }

}  // namespace adjustsat
