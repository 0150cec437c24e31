// trialkit/scorestore.h

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

#ifndef TRIALKIT_SCORESTORE_H_
#define TRIALKIT_SCORESTORE_H_

#include <Eigen/Dense>

#include <cstddef>
#include <istream>
#include <string>
#include <vector>

#include "trialkit/trialset.h"

namespace trialkit {

/// Scores of one system, in file order.  Scores are finite and keys unique.
struct ScoreList {
  struct Entry {
    std::string enroll_id;
    std::string test_id;
    double score = 0.0;
  };
  std::string system_name;
  std::vector<Entry> entries;
};

/// Parses `<enroll> <test> <score>` lines.  Errors carry the 1-based line:
/// kMalformedLine, kNonFiniteScore, kDuplicateKey.
ScoreList ParseScores(std::istream &is, std::string system_name);

std::string WriteScores(const ScoreList &list);

/// Trial-by-system score matrix.  Row i is trial i of the set it was aligned
/// against; column j is `system_names[j]`.
struct ScoreTable {
  std::string trial_set_name;
  std::vector<std::string> system_names;
  Eigen::MatrixXd scores;
  // Per system: entries present in the score list but not in the trial set.
  std::vector<std::size_t> extra_ignored;

  Eigen::Index num_trials() const { return scores.rows(); }
  Eigen::Index num_systems() const { return scores.cols(); }
};

/// Looks every trial up in every list.  Throws Error(kMissingScore) naming up
/// to the first 10 missing (system, enroll, test) keys.
ScoreTable Align(const TrialSet &set, const std::vector<ScoreList> &lists);

/// Copy of row `trial_index`, columns in system order.  Throws
/// Error(kIndexOutOfRange).
Eigen::VectorXd ScoreVector(const ScoreTable &table, Eigen::Index trial_index);

/// One column as a std::vector, for the metrics functions.
std::vector<double> SystemScores(const ScoreTable &table, Eigen::Index system);

}  // namespace trialkit

#endif  // TRIALKIT_SCORESTORE_H_
