// trialkit/miner.h

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

#ifndef TRIALKIT_MINER_H_
#define TRIALKIT_MINER_H_

#include <cstddef>
#include <string>

#include "trialkit/scorestore.h"
#include "trialkit/svm.h"
#include "trialkit/trialset.h"

namespace trialkit {

struct MiningReport {
  std::string set_name;
  std::size_t n_target_full = 0;
  std::size_t n_nontarget_full = 0;
  std::size_t n_target_hard = 0;
  std::size_t n_nontarget_hard = 0;
  double hard_fraction = 0.0;
  SvmModeld model;
};

struct MiningResult {
  TrialSet hard;
  MiningReport report;
};

/// Hard trials are the support vectors of a linear SVM trained to separate
/// Target (+1) from Nontarget (-1) trials using each trial's row of score
/// vectors.  The SVM is fit on the set itself.  `hard` keeps the original
/// trial order.  Throws Error(kDimensionMismatch) if the table was not
/// aligned to `set`, Error(kSingleClass) if one label is absent, and
/// whatever TrainLinearSvm throws.
MiningResult MineHardTrials(const TrialSet &set, const ScoreTable &table,
                            const SvmParams &params = {});

/// Fixed-width text table in the order: full Target, full Nontarget,
/// hard Target, hard Nontarget, hard fraction (3 decimals).
std::string MiningStatsText(const MiningReport &report);

/// `set,full_target,full_nontarget,hard_target,hard_nontarget,fraction`
/// header plus one row.
std::string MiningStatsCsv(const MiningReport &report);

}  // namespace trialkit

#endif  // TRIALKIT_MINER_H_
