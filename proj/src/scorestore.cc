// src/scorestore.cc

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

#include "trialkit/scorestore.h"

#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "trialkit/error.h"
#include "trialkit/text-util.h"

namespace trialkit {

ScoreList ParseScores(std::istream &is, std::string system_name) {
  ScoreList list;
  list.system_name = std::move(system_name);
  std::unordered_set<std::string> seen;
  ForEachDataLine(is, [&](std::size_t line_no,
                          const std::vector<std::string_view> &f) {
    const std::string where = list.system_name + " line " +
                              std::to_string(line_no);
    if (f.size() != 3)
      throw Error(ErrorKind::kMalformedLine,
                  where + ": expected '<enroll> <test> <score>'", line_no);
    auto score = ParseDouble(f[2]);
    if (!score)
      throw Error(ErrorKind::kMalformedLine,
                  where + ": cannot parse score '" + std::string(f[2]) + "'",
                  line_no);
    if (!std::isfinite(*score))
      throw Error(ErrorKind::kNonFiniteScore,
                  where + ": non-finite score '" + std::string(f[2]) + "'",
                  line_no);
    if (!seen.insert(TrialKey(f[0], f[1])).second)
      throw Error(ErrorKind::kDuplicateKey,
                  where + ": duplicate key " + TrialKey(f[0], f[1]), line_no);
    list.entries.push_back({std::string(f[0]), std::string(f[1]), *score});
  });
  return list;
}

std::string WriteScores(const ScoreList &list) {
  std::string out;
  for (const auto &e : list.entries) {
    out += e.enroll_id;
    out += ' ';
    out += e.test_id;
    out += ' ';
    out += ShortestDecimal(e.score);
    out += '\n';
  }
  return out;
}

ScoreTable Align(const TrialSet &set, const std::vector<ScoreList> &lists) {
  const Eigen::Index n = static_cast<Eigen::Index>(set.size());
  const Eigen::Index k = static_cast<Eigen::Index>(lists.size());

  std::unordered_map<std::string, Eigen::Index> row_of;
  row_of.reserve(set.size());
  for (Eigen::Index i = 0; i < n; ++i) row_of.emplace(TrialKey(set[i]), i);

  ScoreTable table;
  table.trial_set_name = set.name();
  table.scores.resize(n, k);
  table.extra_ignored.assign(lists.size(), 0);

  constexpr std::size_t kMaxReported = 10;
  std::vector<std::string> missing;
  std::size_t total_missing = 0;
  std::vector<char> filled(static_cast<std::size_t>(n));

  for (Eigen::Index j = 0; j < k; ++j) {
    const ScoreList &list = lists[j];
    table.system_names.push_back(list.system_name);
    std::fill(filled.begin(), filled.end(), 0);
    for (const auto &e : list.entries) {
      auto it = row_of.find(TrialKey(e.enroll_id, e.test_id));
      if (it == row_of.end()) {
        ++table.extra_ignored[j];
        continue;
      }
      table.scores(it->second, j) = e.score;
      filled[it->second] = 1;
    }
    for (Eigen::Index i = 0; i < n; ++i) {
      if (filled[i]) continue;
      if (missing.size() < kMaxReported)
        missing.push_back("(" + list.system_name + ", " + set[i].enroll_id +
                          ", " + set[i].test_id + ")");
      ++total_missing;
    }
  }

  if (total_missing > 0) {
    std::string msg = "missing " + std::to_string(total_missing) +
                      " score(s); first: ";
    for (std::size_t m = 0; m < missing.size(); ++m) {
      if (m) msg += ' ';
      msg += missing[m];
    }
    throw Error(ErrorKind::kMissingScore, msg);
  }
  return table;
}

Eigen::VectorXd ScoreVector(const ScoreTable &table, Eigen::Index trial_index) {
  if (trial_index < 0 || trial_index >= table.num_trials())
    throw Error(ErrorKind::kIndexOutOfRange,
                "trial index " + std::to_string(trial_index) +
                    " out of range [0, " + std::to_string(table.num_trials()) +
                    ")");
  return table.scores.row(trial_index).transpose();
}

std::vector<double> SystemScores(const ScoreTable &table, Eigen::Index system) {
  if (system < 0 || system >= table.num_systems())
    throw Error(ErrorKind::kIndexOutOfRange,
                "system index " + std::to_string(system) + " out of range");
  std::vector<double> out(static_cast<std::size_t>(table.num_trials()));
  Eigen::Map<Eigen::VectorXd>(out.data(), table.num_trials()) =
      table.scores.col(system);
  return out;
}

}  // namespace trialkit
