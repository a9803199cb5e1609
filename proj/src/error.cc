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

#include "error.h"

namespace mlpwr {

const char* ErrcName(Errc code) {
  switch (code) {
    case Errc::kMalformedPrefix:
      return "MALFORMED_PREFIX";
    case Errc::kBadStructure:
      return "BAD_STRUCTURE";
    case Errc::kMissingField:
      return "MISSING_FIELD";
    case Errc::kBadHeader:
      return "BAD_HEADER";
    case Errc::kBadRow:
      return "BAD_ROW";
    case Errc::kNegativeValue:
      return "NEGATIVE_VALUE";
    case Errc::kConnectRefused:
      return "CONNECT_REFUSED";
    case Errc::kProtocolMismatch:
      return "PROTOCOL_MISMATCH";
    case Errc::kBusyStreaming:
      return "BUSY_STREAMING";
    case Errc::kAlreadyStreaming:
      return "ALREADY_STREAMING";
    case Errc::kNotStreaming:
      return "NOT_STREAMING";
    case Errc::kUnsupportedRange:
      return "UNSUPPORTED_RANGE";
    case Errc::kBadCommand:
      return "BAD_COMMAND";
    case Errc::kTimeout:
      return "TIMEOUT";
    case Errc::kIoError:
      return "IO_ERROR";
    case Errc::kSyncTimeout:
      return "SYNC_TIMEOUT";
    case Errc::kNegativeRtt:
      return "NEGATIVE_RTT";
    case Errc::kEmptyProfile:
      return "EMPTY_PROFILE";
    case Errc::kBadPinSequence:
      return "BAD_PIN_SEQUENCE";
    case Errc::kZeroInferences:
      return "ZERO_INFERENCES";
    case Errc::kMissingRunStart:
      return "MISSING_RUN_START";
    case Errc::kMissingRunStop:
      return "MISSING_RUN_STOP";
    case Errc::kMultipleRuns:
      return "MULTIPLE_RUNS";
    case Errc::kInvertedWindow:
      return "INVERTED_WINDOW";
    case Errc::kNoSamplesInWindow:
      return "NO_SAMPLES_IN_WINDOW";
    case Errc::kDivisionByZero:
      return "DIVISION_BY_ZERO";
    case Errc::kNoPowerReadings:
      return "NO_POWER_READINGS";
    case Errc::kUncoveredNode:
      return "UNCOVERED_NODE";
    case Errc::kMissingMethodDoc:
      return "MISSING_METHOD_DOC";
    case Errc::kWindowMismatch:
      return "WINDOW_MISMATCH";
    case Errc::kTimestampMisalignment:
      return "TIMESTAMP_MISALIGNMENT";
    case Errc::kAbort:
      return "ABORT";
    case Errc::kInsufficientVersions:
      return "INSUFFICIENT_VERSIONS";
    case Errc::kBadConfig:
      return "BAD_CONFIG";
  }
  return "UNKNOWN";
}

}  // namespace mlpwr
