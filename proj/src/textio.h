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
/// \file
/// \brief Text helpers shared by the log, CSV, and wire-protocol codecs.
/// Doubles are formatted with the shortest representation that parses back
/// to the same bits, which is what makes the round-trip guarantees hold.

#ifndef MLPWR_TEXTIO_H_
#define MLPWR_TEXTIO_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mlpwr {

std::string FormatDouble(double v);
std::string FormatInt(int64_t v);

std::optional<double> ParseDouble(std::string_view s);
std::optional<int64_t> ParseInt(std::string_view s);

/// Splits on a single-character delimiter; keeps empty fields.
std::vector<std::string_view> SplitField(std::string_view s, char delim);

/// Splits on runs of spaces; drops empty tokens (wire-protocol style).
std::vector<std::string_view> SplitTokens(std::string_view s);

std::string_view TrimRightNewline(std::string_view s);

/// Reads a whole file; returns nullopt if it cannot be opened.
std::optional<std::string> ReadFileText(const std::string& path);
bool WriteFileText(const std::string& path, std::string_view content);

/// Rounds to nearest integer, ties to even. Used when rebasing timestamps
/// with fractional clock offsets.
int64_t RoundHalfToEven(double v);

}  // namespace mlpwr

#endif  // MLPWR_TEXTIO_H_
