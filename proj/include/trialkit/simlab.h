// trialkit/simlab.h

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

#ifndef TRIALKIT_SIMLAB_H_
#define TRIALKIT_SIMLAB_H_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "trialkit/rng.h"

namespace trialkit {

/*
  Easy-trial injection study.  Two synthetic systems share one pool of
  positive (target) scores and each has its own pool of negative scores.
  At every step a batch of easy negatives and/or easy positives is drawn and
  appended cumulatively; both systems see the same easy scores.  EER of each
  system and the relative EER reduction from system 1 to system 2 are
  recomputed after each step.

  Draw order inside one repeat (all from Substream(seed, repeat)):
    positives, system-1 negatives, system-2 negatives, then per step
    the easy-negative batch (unless kPosOnly) followed by the easy-positive
    batch (unless kNegOnly).
*/

struct GaussianSpec {
  double mean = 0.0;
  double std = 1.0;
  std::size_t count = 0;
};

enum class InjectionMode { kNegOnly, kPosOnly, kBoth };

std::string_view InjectionModeName(InjectionMode mode);  // "neg"/"pos"/"both"

struct SimConfig {
  GaussianSpec pos{0.0, 1.0, 10000};
  GaussianSpec neg_sys1{-1.0, 1.0, 10000};
  GaussianSpec neg_sys2{-1.5, 1.0, 10000};
  // count is ignored for the easy pools; batch_size is used instead.
  GaussianSpec easy_neg{-3.0, 1.0, 0};
  GaussianSpec easy_pos{3.0, 1.0, 0};
  std::size_t batch_size = 500;
  std::size_t steps = 1000;
  std::size_t repeats = 10;
  InjectionMode mode = InjectionMode::kNegOnly;
  std::uint64_t seed = 42;
};

/// Throws Error(kInvalidConfig).
void Validate(const SimConfig &cfg);

/// Sets one field from a `key=value` pair, e.g. "neg1_mean", "-1.2".  Keys:
/// mode steps batch_size repeats seed, and <pool>_mean/_std/_count for pools
/// pos neg1 neg2, <pool>_mean/_std for easy_neg easy_pos.
void SetSimConfigValue(SimConfig &cfg, std::string_view key,
                       std::string_view value);

/// Flat `key=value` text, one per line; '#' starts a comment.
SimConfig ParseSimConfig(std::istream &is, SimConfig base = {});

/// Every field as `key=value` lines, in a fixed order.
std::string DescribeSimConfig(const SimConfig &cfg);

/// `count` normal variates by Box-Muller over the stream's uniforms: each
/// pair of uniforms (u1 in (0,1], u2 in [0,1)) yields both
/// r*cos(2*pi*u2) and r*sin(2*pi*u2), r = sqrt(-2 ln u1).  An odd count
/// drops the final sine variate.
std::vector<double> SampleGaussian(const GaussianSpec &spec, SplitMix64 &rng);

struct SimRecord {
  std::size_t step = 0;
  std::size_t n_easy = 0;
  double eer_sys1 = 0.0;
  double eer_sys2 = 0.0;
  double rel_reduction = 0.0;
};

struct MeanVariance {
  double mean = 0.0;
  double variance = 0.0;  // population variance over repeats
};

struct SimAggregate {
  std::size_t step = 0;
  std::size_t n_easy = 0;
  MeanVariance eer_sys1;
  MeanVariance eer_sys2;
  MeanVariance rel_reduction;
};

struct SimResult {
  SimConfig config;
  std::vector<std::vector<SimRecord>> per_repeat;  // [repeat][step]
  std::vector<SimAggregate> aggregate;             // [step]
};

/// Easy trials added after `step` steps: step * batch_size, doubled in kBoth.
std::size_t EasyTrialsAdded(const SimConfig &cfg, std::size_t step);

/// Runs all repeats, on up to `threads` workers (0 = hardware concurrency).
/// The result does not depend on the thread count.
SimResult RunSimulation(const SimConfig &cfg, unsigned threads = 0);

/// CSV with header `step,n_easy,metric,statistic,value`.  Rows are ordered by
/// step, then metric (eer_sys1, eer_sys2, rel_reduction), then statistic
/// (mean, variance, and repeat_<r> when `per_repeat_rows`).  Values use the
/// shortest round-trip decimal form.
std::string ExportSimCsv(const SimResult &result, bool per_repeat_rows = false);

/// Standalone SVG: one chart per metric, mean line inside a mean +/- one
/// standard deviation band.  Throws Error(kTooFewSteps) with < 2 steps of
/// aggregate.
std::string ExportSimPlotSvg(const SimResult &result);

}  // namespace trialkit

#endif  // TRIALKIT_SIMLAB_H_
