// trialkit/text-util.h

// Copyright 2026  The trialkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef TRIALKIT_TEXT_UTIL_H_
#define TRIALKIT_TEXT_UTIL_H_

#include <functional>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace trialkit {

/// Splits on runs of ASCII spaces and tabs; empty fields are dropped.
std::vector<std::string_view> SplitFields(std::string_view line);

/// True if the token is non-empty and has no whitespace byte in it.
bool IsToken(std::string_view s);

/// Calls `fn(line_no, fields)` for every line that has at least one field.
/// Line numbers are 1-based physical line numbers.
void ForEachDataLine(
    std::istream &is,
    const std::function<void(std::size_t, const std::vector<std::string_view> &)>
        &fn);

/// Shortest decimal string that parses back to exactly `v`.
std::string ShortestDecimal(double v);

/// Fixed-point with `digits` decimals, "C" locale.
std::string FixedDecimal(double v, int digits);

/// Full-precision parse; accepts scientific notation, "nan" and "inf".
/// Returns nullopt when the whole token is not a number.
std::optional<double> ParseDouble(std::string_view s);

std::string ReadFileToString(const std::string &path);
void WriteStringToFile(const std::string &path, std::string_view text);

}  // namespace trialkit

#endif  // TRIALKIT_TEXT_UTIL_H_
