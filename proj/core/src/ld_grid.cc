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

#include "adjustsat/ld_grid.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include "adjustsat/error.h"

namespace adjustsat::stimulus {

namespace {

double RoundOffset(double v) {
  const double scale = std::round(1.0 / kOffsetResolution);
  const double out = std::round(v * scale) / scale;
  return out == 0.0 ? 0.0 : out;  // no negative zero
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

double ParseNumber(std::string_view text, std::string_view segment) {
  std::string_view s = Trim(text);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() ||
      !std::isfinite(value)) {
    throw Error(ErrorCode::kMalformedSpec,
                "bad number '" + std::string(text) + "' in segment '" +
                    std::string(segment) + "'");
  }
  return value;
}

GridSegment ParseSegment(std::string_view segment) {
  const std::size_t c1 = segment.find(':');
  const std::size_t c2 =
      c1 == std::string_view::npos ? c1 : segment.find(':', c1 + 1);
  if (c2 == std::string_view::npos ||
      segment.find(':', c2 + 1) != std::string_view::npos) {
    throw Error(ErrorCode::kMalformedSpec,
                "segment '" + std::string(segment) + "' is not from:step:to");
  }
  return GridSegment{ParseNumber(segment.substr(0, c1), segment),
                     ParseNumber(segment.substr(c1 + 1, c2 - c1 - 1), segment),
                     ParseNumber(segment.substr(c2 + 1), segment)};
}

std::string FormatNumber(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  std::string s(buf, ptr);
  return v > 0.0 ? "+" + s : s;
}

std::string Describe(const GridSegment& s) {
  return FormatNumber(s.from) + ":" + FormatNumber(s.step) + ":" +
         FormatNumber(s.to);
}

}  // namespace

LdGrid MakeGrid(std::vector<GridSegment> segments) {
  if (segments.empty()) {
    throw Error(ErrorCode::kMalformedSpec, "grid has no segments");
  }
  LdGrid grid;
  for (const GridSegment& seg : segments) {
    if (!(seg.from > seg.to)) {
      throw Error(ErrorCode::kMalformedSpec,
                  "segment " + Describe(seg) + ": from must exceed to");
    }
    if (!(seg.step > 0.0)) {
      throw Error(ErrorCode::kMalformedSpec,
                  "segment " + Describe(seg) + ": step must be positive");
    }
    const double exact = (seg.from - seg.to) / seg.step;
    const double n = std::round(exact);
    if (std::fabs(exact - n) > 1e-6 * std::max(1.0, n)) {
      throw Error(ErrorCode::kMalformedSpec,
                  "segment " + Describe(seg) +
                      ": step does not divide the range evenly");
    }
    const double first = RoundOffset(seg.from);
    if (!grid.offsets_.empty() && !(first < grid.offsets_.back())) {
      throw Error(ErrorCode::kNonMonotonic,
                  "segment " + Describe(seg) +
                      " does not continue below the previous segment");
    }
    const auto count = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i <= count; ++i) {
      const double v = i == count ? seg.to : seg.from - i * seg.step;
      grid.offsets_.push_back(RoundOffset(v));
    }
  }

  bool has_default = false;
  for (std::size_t i = 0; i < grid.offsets_.size(); ++i) {
    if (grid.offsets_[i] == 0.0) {
      grid.default_index_ = i;
      has_default = true;
    }
  }
  if (!has_default) {
    throw Error(ErrorCode::kMissingDefault,
                "grid does not contain the 0 LU default offset");
  }
  grid.segments_ = std::move(segments);
  return grid;
}

LdGrid ParseGrid(std::string_view spec) {
  std::vector<GridSegment> segments;
  std::size_t start = 0;
  while (true) {
    const std::size_t semi = spec.find(';', start);
    const std::string_view part = Trim(spec.substr(
        start, semi == std::string_view::npos ? std::string_view::npos
                                              : semi - start));
    if (part.empty()) {
      throw Error(ErrorCode::kMalformedSpec,
                  "empty segment in '" + std::string(spec) + "'");
    }
    segments.push_back(ParseSegment(part));
    if (semi == std::string_view::npos) break;
    start = semi + 1;
  }
  return MakeGrid(std::move(segments));
}

std::string FormatGrid(const LdGrid& grid) {
  std::string out;
  for (const GridSegment& seg : grid.segments()) {
    if (!out.empty()) out += ';';
    out += Describe(seg);
  }
  return out;
}

}  // namespace adjustsat::stimulus
