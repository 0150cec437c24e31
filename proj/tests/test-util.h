// tests/test-util.h


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

#ifndef TRIALKIT_TESTS_TEST_UTIL_H_
#define TRIALKIT_TESTS_TEST_UTIL_H_

#include <unistd.h>

#include <cmath>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "trialkit/rng.h"
#include "trialkit/trialset.h"

namespace trialkit {
namespace testing {

// Standard normal CDF, independent of anything in the library.
inline double Phi(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

// Fresh scratch directory under the system temp dir.
inline std::filesystem::path ScratchDir(const std::string &tag) {
  auto dir = std::filesystem::temp_directory_path() /
             ("trialkit-" + tag + "-" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline double Uniform(SplitMix64 &rng, double lo, double hi) {
  return lo + (hi - lo) * rng.NextUnit();
}

inline std::size_t IntIn(SplitMix64 &rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng.NextBelow(hi - lo + 1));
}

inline double Normal(SplitMix64 &rng) {
  const double u1 = rng.NextUnitOpenLow(), u2 = rng.NextUnit();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

// Scores drawn from a small grid so that ties are common.
inline std::vector<double> GridScores(SplitMix64 &rng, std::size_t n,
                                      int levels) {
  std::vector<double> v(n);
  for (auto &s : v)
    s = static_cast<double>(static_cast<int>(rng.NextBelow(levels))) - levels / 2;
  return v;
}

// Catalog of n_spk speakers with the given utterance counts.
inline UtteranceCatalog MakeCatalog(const std::vector<std::size_t> &utts) {
  std::vector<UtteranceCatalog::Entry> entries;
  for (std::size_t s = 0; s < utts.size(); ++s)
    for (std::size_t u = 0; u < utts[s]; ++u)
      entries.push_back({"spk" + std::to_string(s),
                         "spk" + std::to_string(s) + "-u" + std::to_string(u)});
  return UtteranceCatalog(std::move(entries));
}

}  // namespace testing
}  // namespace trialkit

#endif  // TRIALKIT_TESTS_TEST_UTIL_H_
