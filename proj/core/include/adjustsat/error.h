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

#ifndef ADJUSTSAT_ERROR_H_
#define ADJUSTSAT_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace adjustsat {

// One code per failure the toolkit distinguishes. Callers that need to branch
// on the failure kind catch adjustsat::Error and inspect code().
enum class ErrorCode {
  kInvalidArgument,
  kInvalidClip,
  // loudness
  kTooShort,
  kUnsupportedLayout,
  kUnmeasurable,
  // wav
  kUnreadableFile,
  kUnsupportedFormat,
  kIo,
  // stimulus
  kMalformedSpec,
  kNonMonotonic,
  kMissingDefault,
  kStemMismatch,
  kUnmeasurableStem,
  kUnmeasurableMix,
  kDefaultLdMismatch,
  kInvalidItem,
  // session
  kEmptyPlaylist,
  kInvalidPlaylist,
  kMissingVersions,
  kVolumeChangeLocked,
  kSessionFinished,
  kOutOfOrder,
  kSessionIncomplete,
  kIncompleteLog,
  kIllegalTransition,
  kMalformedLog,
  // analysis
  kEmptyInput,
  kFrequencyMismatch,
  kMalformedInput,
  kNoResults,
  // harness
  kInvalidManifest,
  kCacheMissing,
  kAddressInUse,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace adjustsat

#endif  // ADJUSTSAT_ERROR_H_
