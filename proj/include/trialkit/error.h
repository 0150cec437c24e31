// trialkit/error.h

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

#ifndef TRIALKIT_ERROR_H_
#define TRIALKIT_ERROR_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace trialkit {

enum class ErrorKind {
  // trial lists and catalogs
  kEmptyCatalog,
  kDuplicateUtteranceId,
  kMalformedLine,
  kUnknownLabel,
  kDuplicateTrial,
  kIndexOutOfRange,
  kUnknownTrial,
  // score files
  kNonFiniteScore,
  kDuplicateKey,
  kMissingScore,
  // metrics
  kDegenerateLabels,
  kZeroFalseAcceptances,
  kZeroBaselineEer,
  // simulation
  kInvalidConfig,
  kTooFewSteps,
  // svm
  kSingleClass,
  kNonFiniteInput,
  kDimensionMismatch,
  kDidNotConverge,
  // generic I/O
  kIo,
};

std::string_view ErrorKindName(ErrorKind kind);

/// All failures raised by the library.  `line()` is the 1-based physical line
/// number for errors that originate in a text parser.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string &what,
        std::optional<std::size_t> line = std::nullopt)
      : std::runtime_error(what), kind_(kind), line_(line) {}

  ErrorKind kind() const { return kind_; }
  std::optional<std::size_t> line() const { return line_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> line_;
};

}  // namespace trialkit

#endif  // TRIALKIT_ERROR_H_
