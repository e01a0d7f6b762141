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

#ifndef ADJUSTSAT_TESTS_ORACLES_LOUDNESS_ORACLE_H_
#define ADJUSTSAT_TESTS_ORACLES_LOUDNESS_ORACLE_H_

#include <optional>

#include "adjustsat/audio_clip.h"

namespace adjustsat::oracle {

// Second, deliberately plain integrated-loudness meter for 48 kHz input:
// the published 48 kHz filter table run as direct form I, each 400 ms block
// summed from scratch, then the two gates. nullopt when nothing passes.
std::optional<double> IntegratedLoudness48k(const AudioClip& clip);

// Closed-form LD of a leaky-separation render: the estimates carry each
// other's stem at `leak_db`, and the background estimate is scaled by
// `offset_lu`.
double LeakyRenderLd(double ld0, double offset_lu, std::optional<double> leak_db);

}  // namespace adjustsat::oracle

#endif  // ADJUSTSAT_TESTS_ORACLES_LOUDNESS_ORACLE_H_
