// src/metrics.cc

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

#include "trialkit/metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "trialkit/error.h"
#include "trialkit/text-util.h"

namespace trialkit {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Operating point with the raw counts kept alongside, so far == frr can be
// decided exactly by cross-multiplication.
struct CountedPoint {
  double threshold;
  std::int64_t false_accepts;  // nontargets >= threshold
  std::int64_t misses;         // targets < threshold
};

// Visits the -inf sentinel, one point per distinct score, then the +inf
// sentinel.  `fn` returns false to stop early.
template <typename Fn>
void Sweep(std::span<const double> tgt, std::span<const double> non, Fn &&fn) {
  const auto nt = static_cast<std::int64_t>(tgt.size());
  const auto nn = static_cast<std::int64_t>(non.size());
  if (!fn(CountedPoint{-kInf, nn, 0})) return;
  std::size_t it = 0, in = 0;
  while (it < tgt.size() || in < non.size()) {
    double v;
    if (it == tgt.size()) v = non[in];
    else if (in == non.size()) v = tgt[it];
    else v = std::min(tgt[it], non[in]);
    if (!fn(CountedPoint{v, nn - static_cast<std::int64_t>(in),
                         static_cast<std::int64_t>(it)}))
      return;
    while (it < tgt.size() && tgt[it] == v) ++it;
    while (in < non.size() && non[in] == v) ++in;
  }
  fn(CountedPoint{kInf, 0, nt});
}

void CheckNonDegenerate(std::size_t nt, std::size_t nn) {
  if (nt == 0 || nn == 0)
    throw Error(ErrorKind::kDegenerateLabels,
                "need at least one target and one nontarget (got " +
                    std::to_string(nt) + " targets, " + std::to_string(nn) +
                    " nontargets)");
}

struct SortedSplit {
  std::vector<double> targets;
  std::vector<double> nontargets;
};

SortedSplit SplitAndSort(const ScoredTrials &data) {
  if (data.scores.size() != data.labels.size())
    throw Error(ErrorKind::kDimensionMismatch,
                "scores and labels differ in length");
  SortedSplit s;
  for (std::size_t i = 0; i < data.scores.size(); ++i) {
    if (std::isnan(data.scores[i]))
      throw Error(ErrorKind::kNonFiniteInput, "NaN score at index " +
                                                  std::to_string(i));
    (data.labels[i] == Label::kTarget ? s.targets : s.nontargets)
        .push_back(data.scores[i]);
  }
  CheckNonDegenerate(s.targets.size(), s.nontargets.size());
  std::sort(s.targets.begin(), s.targets.end());
  std::sort(s.nontargets.begin(), s.nontargets.end());
  return s;
}

}  // namespace

ScoredTrials MakeScoredTrials(const TrialSet &set,
                              std::span<const double> scores) {
  if (scores.size() != set.size())
    throw Error(ErrorKind::kDimensionMismatch,
                "score count does not match trial count");
  ScoredTrials d;
  d.scores.assign(scores.begin(), scores.end());
  d.labels.reserve(set.size());
  for (const Trial &t : set.trials()) d.labels.push_back(t.label);
  return d;
}

ScoredTrials MakeScoredTrials(std::span<const double> target_scores,
                              std::span<const double> nontarget_scores) {
  ScoredTrials d;
  d.scores.reserve(target_scores.size() + nontarget_scores.size());
  d.scores.insert(d.scores.end(), target_scores.begin(), target_scores.end());
  d.scores.insert(d.scores.end(), nontarget_scores.begin(),
                  nontarget_scores.end());
  d.labels.assign(target_scores.size(), Label::kTarget);
  d.labels.resize(d.scores.size(), Label::kNontarget);
  return d;
}

void Validate(const DcfParams &p) {
  if (!(p.p_target > 0.0 && p.p_target < 1.0))
    throw Error(ErrorKind::kInvalidConfig, "p_target must be in (0, 1)");
  if (!(p.c_miss > 0.0) || !(p.c_fa > 0.0))
    throw Error(ErrorKind::kInvalidConfig, "DCF costs must be positive");
}

std::vector<OperatingPoint> RocPoints(const ScoredTrials &data) {
  SortedSplit s = SplitAndSort(data);
  const double nt = static_cast<double>(s.targets.size());
  const double nn = static_cast<double>(s.nontargets.size());
  std::vector<OperatingPoint> out;
  Sweep(s.targets, s.nontargets, [&](const CountedPoint &p) {
    out.push_back({p.threshold, static_cast<double>(p.false_accepts) / nn,
                   static_cast<double>(p.misses) / nt});
    return true;
  });
  return out;
}

ThresholdedValue EerSorted(std::span<const double> tgt,
                           std::span<const double> non) {
  CheckNonDegenerate(tgt.size(), non.size());
  const auto nt = static_cast<std::int64_t>(tgt.size());
  const auto nn = static_cast<std::int64_t>(non.size());
  // sign(far - frr) scaled by nt*nn, exact in 64-bit for any realistic size.
  auto gap = [&](const CountedPoint &p) {
    return p.false_accepts * nt - p.misses * nn;
  };

  ThresholdedValue result;
  CountedPoint prev{};
  bool have_prev = false;
  Sweep(tgt, non, [&](const CountedPoint &p) {
    const std::int64_t g = gap(p);
    if (g > 0) {
      prev = p;
      have_prev = true;
      return true;
    }
    const double far = static_cast<double>(p.false_accepts) / nn;
    const double frr = static_cast<double>(p.misses) / nt;
    if (g == 0 || !have_prev) {
      result = {far, p.threshold};
      return false;
    }
    const double far_p = static_cast<double>(prev.false_accepts) / nn;
    const double frr_p = static_cast<double>(prev.misses) / nt;
    const double gp = static_cast<double>(gap(prev));
    const double t = gp / (gp - static_cast<double>(g));
    // Both lines meet at the same height; average the two evaluations to keep
    // the result symmetric in far/frr.
    const double eer =
        0.5 * ((far_p + t * (far - far_p)) + (frr_p + t * (frr - frr_p)));
    double thr;
    if (std::isinf(prev.threshold)) thr = p.threshold;
    else if (std::isinf(p.threshold)) thr = prev.threshold;
    else thr = prev.threshold + t * (p.threshold - prev.threshold);
    result = {eer, thr};
    return false;
  });
  return result;
}

ThresholdedValue Eer(const ScoredTrials &data) {
  SortedSplit s = SplitAndSort(data);
  return EerSorted(s.targets, s.nontargets);
}

ThresholdedValue MinDcf(const ScoredTrials &data, const DcfParams &params) {
  Validate(params);
  SortedSplit s = SplitAndSort(data);
  const double nt = static_cast<double>(s.targets.size());
  const double nn = static_cast<double>(s.nontargets.size());
  const double w_miss = params.c_miss * params.p_target;
  const double w_fa = params.c_fa * (1.0 - params.p_target);
  const double norm = std::min(w_miss, w_fa);
  ThresholdedValue best{kInf, 0.0};
  Sweep(s.targets, s.nontargets, [&](const CountedPoint &p) {
    const double cost = (w_miss * (static_cast<double>(p.misses) / nt) +
                         w_fa * (static_cast<double>(p.false_accepts) / nn)) /
                        norm;
    if (cost < best.value) best = {cost, p.threshold};
    return true;
  });
  return best;
}

OperatingPoint FarFrrAt(const ScoredTrials &data, double threshold) {
  if (data.scores.size() != data.labels.size())
    throw Error(ErrorKind::kDimensionMismatch,
                "scores and labels differ in length");
  std::size_t nt = 0, nn = 0, fa = 0, miss = 0;
  for (std::size_t i = 0; i < data.scores.size(); ++i) {
    const bool accept = data.scores[i] >= threshold;
    if (data.labels[i] == Label::kTarget) {
      ++nt;
      if (!accept) ++miss;
    } else {
      ++nn;
      if (accept) ++fa;
    }
  }
  CheckNonDegenerate(nt, nn);
  return {threshold, static_cast<double>(fa) / static_cast<double>(nn),
          static_cast<double>(miss) / static_cast<double>(nt)};
}

DetectionReport Evaluate(const ScoredTrials &data, const DcfParams &params) {
  DetectionReport r;
  auto e = Eer(data);
  auto d = MinDcf(data, params);
  r.eer = e.value;
  r.eer_threshold = e.threshold;
  r.min_dcf = d.value;
  r.min_dcf_threshold = d.threshold;
  r.curve = RocPoints(data);
  return r;
}

double RelativeFarChange(std::span<const double> negatives_a,
                         std::span<const double> negatives_b,
                         double threshold) {
  if (negatives_a.size() != negatives_b.size() || negatives_a.empty())
    throw Error(ErrorKind::kDimensionMismatch,
                "both systems must score the same non-empty negative set");
  std::int64_t fa_a = 0, fa_b = 0;
  for (double s : negatives_a) fa_a += (s >= threshold);
  for (double s : negatives_b) fa_b += (s >= threshold);
  if (fa_a == 0)
    throw Error(ErrorKind::kZeroFalseAcceptances,
                "system A has no false acceptances at threshold " +
                    ShortestDecimal(threshold) + "; relative FAR undefined");
  // FAR_A and FAR_B share the denominator, which cancels.
  return static_cast<double>(fa_a - fa_b) / static_cast<double>(fa_a);
}

double RelativeEerReduction(double eer_a, double eer_b) {
  if (eer_a == 0.0)
    throw Error(ErrorKind::kZeroBaselineEer,
                "baseline EER is zero; relative reduction undefined");
  return (eer_a - eer_b) / eer_a;
}

double RelativeEerReduction(const ScoredTrials &a, const ScoredTrials &b) {
  return RelativeEerReduction(Eer(a).value, Eer(b).value);
}

std::string FormatEerPercent(double eer) { return FixedDecimal(100.0 * eer, 3); }

std::string FormatMinDcf(double min_dcf) { return FixedDecimal(min_dcf, 4); }

}  // namespace trialkit
