// src/miner.cc

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

#include "trialkit/miner.h"

#include <algorithm>
#include <vector>

#include "trialkit/error.h"
#include "trialkit/text-util.h"

namespace trialkit {

MiningResult MineHardTrials(const TrialSet &set, const ScoreTable &table,
                            const SvmParams &params) {
  if (table.num_trials() != static_cast<Eigen::Index>(set.size()))
    throw Error(ErrorKind::kDimensionMismatch,
                "score table has " + std::to_string(table.num_trials()) +
                    " rows but the trial set has " +
                    std::to_string(set.size()) + " trials");
  std::vector<int> y;
  y.reserve(set.size());
  for (const Trial &t : set.trials()) y.push_back(LabelSign(t.label));

  MiningResult out;
  out.report.set_name = set.name();
  out.report.model = TrainLinearSvm(table.scores, y, params);

  std::vector<std::size_t> keep;
  keep.reserve(out.report.model.support_indices.size());
  for (Eigen::Index i : out.report.model.support_indices)
    keep.push_back(static_cast<std::size_t>(i));
  out.hard = Subset(set, keep);

  MiningReport &r = out.report;
  r.n_target_full = set.CountTargets();
  r.n_nontarget_full = set.CountNontargets();
  r.n_target_hard = out.hard.CountTargets();
  r.n_nontarget_hard = out.hard.CountNontargets();
  const std::size_t full = r.n_target_full + r.n_nontarget_full;
  r.hard_fraction =
      full == 0 ? 0.0
                : static_cast<double>(r.n_target_hard + r.n_nontarget_hard) /
                      static_cast<double>(full);
  return out;
}

namespace {

std::string PadLeft(const std::string &s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}
std::string PadRight(const std::string &s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

}  // namespace

std::string MiningStatsText(const MiningReport &r) {
  const std::string name = r.set_name.empty() ? "-" : r.set_name;
  const std::size_t name_w = std::max<std::size_t>(name.size(), 6) + 2;
  constexpr std::size_t kCol = 17;
  std::string out;
  out += PadRight("Trials", name_w) + PadRight("Origin", 2 * kCol) +
         PadRight("Hard Trials", 2 * kCol) + "\n";
  out += std::string(name_w, ' ') + PadLeft("# of Target", kCol) +
         PadLeft("# of Non-target", kCol) + PadLeft("# of Target", kCol) +
         PadLeft("# of Non-target", kCol) + PadLeft("Fraction", 10) + "\n";
  out += PadRight(name, name_w) +
         PadLeft(std::to_string(r.n_target_full), kCol) +
         PadLeft(std::to_string(r.n_nontarget_full), kCol) +
         PadLeft(std::to_string(r.n_target_hard), kCol) +
         PadLeft(std::to_string(r.n_nontarget_hard), kCol) +
         PadLeft(FixedDecimal(r.hard_fraction, 3), 10) + "\n";
  return out;
}

std::string MiningStatsCsv(const MiningReport &r) {
  return "set,full_target,full_nontarget,hard_target,hard_nontarget,fraction\n" +
         r.set_name + ',' + std::to_string(r.n_target_full) + ',' +
         std::to_string(r.n_nontarget_full) + ',' +
         std::to_string(r.n_target_hard) + ',' +
         std::to_string(r.n_nontarget_hard) + ',' +
         ShortestDecimal(r.hard_fraction) + '\n';
}

}  // namespace trialkit
