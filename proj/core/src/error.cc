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

#include "adjustsat/error.h"

#include <string>

namespace adjustsat {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvalidClip: return "InvalidClip";
    case ErrorCode::kTooShort: return "TooShort";
    case ErrorCode::kUnsupportedLayout: return "UnsupportedLayout";
    case ErrorCode::kUnmeasurable: return "Unmeasurable";
    case ErrorCode::kUnreadableFile: return "UnreadableFile";
    case ErrorCode::kUnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::kIo: return "Io";
    case ErrorCode::kMalformedSpec: return "MalformedSpec";
    case ErrorCode::kNonMonotonic: return "NonMonotonic";
    case ErrorCode::kMissingDefault: return "MissingDefault";
    case ErrorCode::kStemMismatch: return "StemMismatch";
    case ErrorCode::kUnmeasurableStem: return "UnmeasurableStem";
    case ErrorCode::kUnmeasurableMix: return "UnmeasurableMix";
    case ErrorCode::kDefaultLdMismatch: return "DefaultLdMismatch";
    case ErrorCode::kInvalidItem: return "InvalidItem";
    case ErrorCode::kEmptyPlaylist: return "EmptyPlaylist";
    case ErrorCode::kInvalidPlaylist: return "InvalidPlaylist";
    case ErrorCode::kMissingVersions: return "MissingVersions";
    case ErrorCode::kVolumeChangeLocked: return "VolumeChangeLocked";
    case ErrorCode::kSessionFinished: return "SessionFinished";
    case ErrorCode::kOutOfOrder: return "OutOfOrder";
    case ErrorCode::kSessionIncomplete: return "SessionIncomplete";
    case ErrorCode::kIncompleteLog: return "IncompleteLog";
    case ErrorCode::kIllegalTransition: return "IllegalTransition";
    case ErrorCode::kMalformedLog: return "MalformedLog";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kFrequencyMismatch: return "FrequencyMismatch";
    case ErrorCode::kMalformedInput: return "MalformedInput";
    case ErrorCode::kNoResults: return "NoResults";
    case ErrorCode::kInvalidManifest: return "InvalidManifest";
    case ErrorCode::kCacheMissing: return "CacheMissing";
    case ErrorCode::kAddressInUse: return "AddressInUse";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace adjustsat
