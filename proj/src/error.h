/* Copyright 2026 The mlpwr Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef MLPWR_ERROR_H_
#define MLPWR_ERROR_H_

#include <cassert>
#include <string>
#include <utility>
#include <variant>

namespace mlpwr {

/// Error codes shared across the library. Parsers and protocol calls are
/// total: every failure surfaces as one of these plus a detail string.
enum class Errc {
  // Log / CSV parsing.
  kMalformedPrefix,
  kBadStructure,
  kMissingField,
  kBadHeader,
  kBadRow,
  kNegativeValue,
  // Protocol and connection.
  kConnectRefused,
  kProtocolMismatch,
  kBusyStreaming,
  kAlreadyStreaming,
  kNotStreaming,
  kUnsupportedRange,
  kBadCommand,
  kTimeout,
  kIoError,
  // Clock sync.
  kSyncTimeout,
  kNegativeRtt,
  // Workloads and traces.
  kEmptyProfile,
  kBadPinSequence,
  kZeroInferences,
  // Summarization.
  kMissingRunStart,
  kMissingRunStop,
  kMultipleRuns,
  kInvertedWindow,
  kNoSamplesInWindow,
  kDivisionByZero,
  // Train telemetry.
  kNoPowerReadings,
  kUncoveredNode,
  kMissingMethodDoc,
  kWindowMismatch,
  // Aggregation / orchestration.
  kTimestampMisalignment,
  kAbort,
  // Analysis.
  kInsufficientVersions,
  // Configuration.
  kBadConfig,
};

const char* ErrcName(Errc code);

struct Error {
  Errc code;
  std::string detail;  // offending line, field name, or context

  std::string ToString() const {
    std::string s = ErrcName(code);
    if (!detail.empty()) {
      s += ": ";
      s += detail;
    }
    return s;
  }
};

inline Error MakeError(Errc code, std::string detail = {}) {
  return Error{code, std::move(detail)};
}

/// Value-or-error result. Holds exactly one of the two.
template <typename T>
class Result {
 public:
  Result(T value) : v_(std::move(value)) {}  // NOLINT: implicit by design
  Result(Error error) : v_(std::move(error)) {}

  bool ok() const { return std::holds_alternative<T>(v_); }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    assert(ok());
    return std::get<T>(v_);
  }
  T& value() & {
    assert(ok());
    return std::get<T>(v_);
  }
  T&& value() && {
    assert(ok());
    return std::get<T>(std::move(v_));
  }

  const Error& error() const {
    assert(!ok());
    return std::get<Error>(v_);
  }
  Errc code() const { return error().code; }

 private:
  std::variant<T, Error> v_;
};

/// For operations whose success carries no payload.
struct Unit {};
using Status = Result<Unit>;

inline Status OkStatus() { return Status(Unit{}); }

}  // namespace mlpwr

#endif  // MLPWR_ERROR_H_
