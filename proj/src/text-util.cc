// src/text-util.cc

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

#include "trialkit/text-util.h"

#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "trialkit/error.h"

namespace trialkit {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kEmptyCatalog: return "EmptyCatalog";
    case ErrorKind::kDuplicateUtteranceId: return "DuplicateUtteranceId";
    case ErrorKind::kMalformedLine: return "MalformedLine";
    case ErrorKind::kUnknownLabel: return "UnknownLabel";
    case ErrorKind::kDuplicateTrial: return "DuplicateTrial";
    case ErrorKind::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::kUnknownTrial: return "UnknownTrial";
    case ErrorKind::kNonFiniteScore: return "NonFiniteScore";
    case ErrorKind::kDuplicateKey: return "DuplicateKey";
    case ErrorKind::kMissingScore: return "MissingScore";
    case ErrorKind::kDegenerateLabels: return "DegenerateLabels";
    case ErrorKind::kZeroFalseAcceptances: return "ZeroFalseAcceptances";
    case ErrorKind::kZeroBaselineEer: return "ZeroBaselineEER";
    case ErrorKind::kInvalidConfig: return "InvalidConfig";
    case ErrorKind::kTooFewSteps: return "TooFewSteps";
    case ErrorKind::kSingleClass: return "SingleClass";
    case ErrorKind::kNonFiniteInput: return "NonFiniteInput";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kDidNotConverge: return "DidNotConverge";
    case ErrorKind::kIo: return "Io";
  }
  return "Unknown";
}

namespace {
inline bool IsFieldSep(char c) { return c == ' ' || c == '\t'; }
}  // namespace

std::vector<std::string_view> SplitFields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && IsFieldSep(line[i])) ++i;
    std::size_t start = i;
    while (i < line.size() && !IsFieldSep(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool IsToken(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
        c == '\f')
      return false;
  return true;
}

void ForEachDataLine(
    std::istream &is,
    const std::function<void(std::size_t, const std::vector<std::string_view> &)>
        &fn) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    auto fields = SplitFields(line);
    if (fields.empty()) continue;
    fn(line_no, fields);
  }
}

std::string ShortestDecimal(double v) {
  std::array<char, 64> buf;
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

std::string FixedDecimal(double v, int digits) {
  std::array<char, 512> buf;
  auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                           std::chars_format::fixed, digits);
  return std::string(buf.data(), res.ptr);
}

std::optional<double> ParseDouble(std::string_view s) {
  if (s.empty()) return std::nullopt;
  const char *begin = s.data();
  const char *end = s.data() + s.size();
  // from_chars rejects a leading '+'; score files sometimes carry one.
  if (*begin == '+') {
    ++begin;
    if (begin == end || *begin == '-' || *begin == '+') return std::nullopt;
  }
  double v = 0.0;
  auto res = std::from_chars(begin, end, v);
  if (res.ec != std::errc() || res.ptr != end) {
    // Out-of-range literals (1e999, 1e-999) are still numbers; strtod gives
    // the IEEE result (inf or a denormal/zero).
    if (res.ec == std::errc::result_out_of_range && res.ptr == end)
      return std::strtod(std::string(begin, end).c_str(), nullptr);
    return std::nullopt;
  }
  return v;
}

std::string ReadFileToString(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorKind::kIo, "cannot open " + path + " for reading");
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

void WriteStringToFile(const std::string &path, std::string_view text) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw Error(ErrorKind::kIo, "cannot open " + path + " for writing");
  os.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!os) throw Error(ErrorKind::kIo, "write failed: " + path);
}

}  // namespace trialkit
