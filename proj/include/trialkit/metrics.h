// trialkit/metrics.h

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

#ifndef TRIALKIT_METRICS_H_
#define TRIALKIT_METRICS_H_

#include <span>
#include <string>
#include <vector>

#include "trialkit/trialset.h"

namespace trialkit {

/*
  Detection metrics.  The decision rule everywhere is "accept iff
  score >= threshold", so ties count as acceptances:

    far(t) = #{nontarget scores >= t} / #nontargets
    frr(t) = #{target scores < t}     / #targets

  The operating-point sweep visits one threshold per distinct score value,
  plus sentinels at -inf (accept everything) and +inf (reject everything).
  Only the ordering of the scores matters for far/frr, so every value derived
  from the sweep (EER, minDCF) is invariant under strictly increasing
  transforms of the scores; thresholds of course move with the transform.
*/

struct ScoredTrials {
  std::vector<double> scores;
  std::vector<Label> labels;
};

/// Pairs a score column with the labels of `set`.  Sizes must match.
ScoredTrials MakeScoredTrials(const TrialSet &set,
                              std::span<const double> scores);
/// Targets first, then nontargets.
ScoredTrials MakeScoredTrials(std::span<const double> target_scores,
                              std::span<const double> nontarget_scores);

struct OperatingPoint {
  double threshold = 0.0;
  double far = 0.0;
  double frr = 0.0;
};

struct DcfParams {
  double p_target = 0.01;
  double c_miss = 1.0;
  double c_fa = 1.0;
};

/// Throws Error(kInvalidConfig) unless 0 < p_target < 1 and both costs > 0.
void Validate(const DcfParams &params);

struct ThresholdedValue {
  double value = 0.0;
  double threshold = 0.0;
};

struct DetectionReport {
  double eer = 0.0;
  double eer_threshold = 0.0;
  double min_dcf = 0.0;
  double min_dcf_threshold = 0.0;
  std::vector<OperatingPoint> curve;
};

/// Sweep in increasing threshold order; first point has threshold -inf.
/// Throws Error(kDegenerateLabels) if either class is empty.
std::vector<OperatingPoint> RocPoints(const ScoredTrials &data);

/// Equal error rate.  Where far == frr is not hit exactly at an operating
/// point, the two points bracketing the sign change of (far - frr) are
/// interpolated linearly, in both the rate and the threshold.
ThresholdedValue Eer(const ScoredTrials &data);

/// Same as Eer() for pre-sorted (ascending) per-class score arrays; no
/// allocation, O(#targets + #nontargets).
ThresholdedValue EerSorted(std::span<const double> targets_sorted,
                           std::span<const double> nontargets_sorted);

/// Normalized minimum detection cost,
///   min_t [c_miss*frr*p + c_fa*far*(1-p)] / min(c_miss*p, c_fa*(1-p)),
/// over all operating points including the sentinels, so the result is in
/// [0, 1].  Ties go to the lowest threshold.
ThresholdedValue MinDcf(const ScoredTrials &data, const DcfParams &params = {});

OperatingPoint FarFrrAt(const ScoredTrials &data, double threshold);

DetectionReport Evaluate(const ScoredTrials &data, const DcfParams &params = {});

/// (FAR_A - FAR_B) / FAR_A at a fixed threshold, where both systems scored
/// the same negatives.  Computed from the false-acceptance counts, so with m
/// correct rejections by A and m + k by B the result is exactly k / (N - m)
/// and it does not change when negatives scored below the threshold by both
/// systems are appended.  Throws Error(kZeroFalseAcceptances) when A accepts
/// no negative, Error(kDimensionMismatch) on length mismatch or empty input.
double RelativeFarChange(std::span<const double> negatives_a,
                         std::span<const double> negatives_b,
                         double threshold);

/// (eer(A) - eer(B)) / eer(A); negative when B is worse.  Throws
/// Error(kZeroBaselineEer) when eer(A) == 0.
double RelativeEerReduction(const ScoredTrials &a, const ScoredTrials &b);
double RelativeEerReduction(double eer_a, double eer_b);

// Report formatting: EER as a percentage with 3 decimals ("4.558"), minDCF
// with 4 decimals ("0.4882").
std::string FormatEerPercent(double eer);
std::string FormatMinDcf(double min_dcf);

}  // namespace trialkit

#endif  // TRIALKIT_METRICS_H_
