// trialkit/svm.h

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

#ifndef TRIALKIT_SVM_H_
#define TRIALKIT_SVM_H_

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "trialkit/error.h"
#include "trialkit/rng.h"

namespace trialkit {

/*
  Soft-margin linear SVM, solved in the dual

      max_a  sum_i a_i - 1/2 || sum_i a_i y_i x_i ||^2
      s.t.   0 <= a_i <= c,  sum_i a_i y_i = 0,

  by SMO with an explicit bias.  Pair selection follows Keerthi et al.'s
  "modification 2": with F_i = w.x_i - y_i and

      I_up  = {0<a<c} U {y=+1, a=0} U {y=-1, a=c}
      I_low = {0<a<c} U {y=+1, a=c} U {y=-1, a=0}
      b_up  = min F over I_up,  b_low = max F over I_low,

  the first index sweeps the samples in canonical order, and a violator is
  paired with i_low or i_up, whichever maximizes |F_1 - F_2| (ties to the
  lower index).  Training stops once b_low - b_up <= tol.  At that point the
  final bias, the mean of y_i - w.x_i over free support vectors, satisfies
  every KKT condition to within tol.

  Canonical order: samples are sorted by (label, feature vector) before
  solving, so the result does not depend on the order rows are supplied in.
  Exact duplicates (same label and features) share their dual mass equally
  after solving; the dual objective, w and b are unchanged by that.
*/

struct SvmParams {
  double c = 1.0;
  double tol = 1e-3;
  // Consecutive full sweeps that make no progress while a violation remains
  // before the solver gives up.
  int max_passes_without_change = 10;
  // Cap on successful pair updates.
  std::int64_t max_iterations = 50'000'000;
  // Support threshold; defaults to 1e-8 * c.
  std::optional<double> alpha_eps;
  bool standardize = false;
  // Drives the random start offset of the fallback second-choice scan used
  // when the heuristic partner makes no progress.
  std::uint64_t seed = 42;

  double AlphaEps() const { return alpha_eps.value_or(1e-8 * c); }
};

inline void Validate(const SvmParams &p) {
  if (!(p.c > 0.0) || !std::isfinite(p.c))
    throw Error(ErrorKind::kInvalidConfig, "svm: c must be positive");
  if (!(p.tol > 0.0))
    throw Error(ErrorKind::kInvalidConfig, "svm: tol must be positive");
  if (!(p.AlphaEps() > 0.0 && p.AlphaEps() < p.c))
    throw Error(ErrorKind::kInvalidConfig, "svm: need 0 < alpha_eps < c");
  if (p.max_passes_without_change < 1 || p.max_iterations < 1)
    throw Error(ErrorKind::kInvalidConfig,
                "svm: pass and iteration limits must be >= 1");
}

struct SvmConvergence {
  bool converged = false;  // b_low - b_up <= tol
  bool capped = false;     // stopped by max_iterations
  std::int64_t iterations = 0;
  std::int64_t full_passes = 0;
  double gap = 0.0;                // final b_low - b_up
  double max_kkt_violation = 0.0;  // with the final bias
};

template <typename Scalar>
struct Standardization {
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> mean;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> scale;
};

template <typename Scalar>
struct SvmModel {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  SvmParams params;
  Vector weights;
  Scalar bias = 0;
  Vector alphas;  // in input row order
  std::vector<Eigen::Index> support_indices;
  std::optional<Standardization<Scalar>> standardization;
  SvmConvergence convergence;

  Eigen::Index dimension() const { return weights.size(); }
};

using SvmModeld = SvmModel<double>;

/// {i : alpha_i > alpha_eps}, ascending.
template <typename Derived>
std::vector<Eigen::Index> SupportIndices(const Eigen::MatrixBase<Derived> &alphas,
                                         double alpha_eps) {
  std::vector<Eigen::Index> out;
  for (Eigen::Index i = 0; i < alphas.size(); ++i)
    if (alphas(i) > alpha_eps) out.push_back(i);
  return out;
}

template <typename Scalar>
std::vector<Eigen::Index> SupportIndices(const SvmModel<Scalar> &model) {
  return SupportIndices(model.alphas, model.params.AlphaEps());
}

/// w.x' + b, x' = x after the model's standardization.
template <typename Scalar, typename Derived>
Scalar DecisionValue(const SvmModel<Scalar> &model,
                     const Eigen::MatrixBase<Derived> &x) {
  if (x.size() != model.weights.size())
    throw Error(ErrorKind::kDimensionMismatch,
                "decision value: expected dimension " +
                    std::to_string(model.weights.size()) + ", got " +
                    std::to_string(x.size()));
  if (model.standardization) {
    const auto &s = *model.standardization;
    return model.weights.dot(
               ((x.derived().template cast<Scalar>() - s.mean).array() /
                s.scale.array())
                   .matrix()) +
           model.bias;
  }
  return model.weights.dot(x.derived().template cast<Scalar>()) + model.bias;
}

/// Dual objective sum(a) - 1/2 ||sum a_i y_i x_i||^2 (maximization form).
template <typename DerivedX, typename DerivedA>
typename DerivedX::Scalar DualObjective(const Eigen::MatrixBase<DerivedX> &x,
                                        std::span<const int> y,
                                        const Eigen::MatrixBase<DerivedA> &a) {
  using Scalar = typename DerivedX::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> w =
      Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Zero(x.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i)
    w += (a(i) * y[static_cast<std::size_t>(i)]) * x.row(i).transpose();
  return a.sum() - Scalar(0.5) * w.squaredNorm();
}

/// Largest violation of the KKT conditions by `model` on (x, y):
///   a ~ 0      : y f >= 1
///   0 < a < c  : y f == 1
///   a ~ c      : y f <= 1
/// "~" uses the model's alpha_eps.
template <typename Scalar, typename Derived>
Scalar MaxKktViolation(const SvmModel<Scalar> &model,
                       const Eigen::MatrixBase<Derived> &x,
                       std::span<const int> y) {
  const Scalar c = static_cast<Scalar>(model.params.c);
  const Scalar eps = static_cast<Scalar>(model.params.AlphaEps());
  Scalar worst = 0;
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    const Scalar margin =
        y[static_cast<std::size_t>(i)] *
        DecisionValue(model, x.row(i).transpose().eval());
    const Scalar a = model.alphas(i);
    Scalar v;
    if (a <= eps) v = std::max<Scalar>(0, 1 - margin);
    else if (a >= c - eps) v = std::max<Scalar>(0, margin - 1);
    else v = std::abs(margin - 1);
    worst = std::max(worst, v);
  }
  return worst;
}

namespace detail {

template <typename Scalar>
class SmoSolver {
 public:
  using Matrix =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  SmoSolver(const Matrix &x, const std::vector<int> &y, const SvmParams &p)
      : x_(x), y_(y), c_(static_cast<Scalar>(p.c)),
        tol_(static_cast<Scalar>(p.tol)), params_(p),
        rng_(Substream(p.seed, 0x534d4fULL)),
        n_(x.rows()),
        alpha_(Vector::Zero(x.rows())),
        w_(Vector::Zero(x.cols())),
        f_(x.rows()),
        free_pos_(static_cast<std::size_t>(x.rows()), -1) {
    for (Eigen::Index i = 0; i < n_; ++i) f_(i) = -y_[i];
    for (Eigen::Index i = 0; i < n_; ++i) {
      if (y_[i] > 0 && i_up_ < 0) i_up_ = i;
      if (y_[i] < 0 && i_low_ < 0) i_low_ = i;
    }
    b_up_ = -1;
    b_low_ = 1;
  }

  void Solve(SvmConvergence &conv) {
    bool examine_all = true;
    int stagnant = 0;
    while (!capped_) {
      std::int64_t changed = 0;
      if (examine_all) {
        ++conv.full_passes;
        for (Eigen::Index i = 0; i < n_ && !capped_; ++i)
          changed += ExamineExample(i);
      } else {
        // Optimize within I0 on the worst violating pair until it is
        // tol-optimal; then go back to a full sweep.
        while (!capped_ && i_up_ >= 0 && i_low_ >= 0 &&
               b_low_ - b_up_ > tol_) {
          if (!TakeStep(i_up_, i_low_)) break;
        }
      }
      if (examine_all) {
        if (changed > 0) {
          stagnant = 0;
          examine_all = false;
        } else if (GlobalGap() <= tol_) {
          break;
        } else if (++stagnant >= params_.max_passes_without_change) {
          break;
        }
      } else {
        examine_all = true;
      }
    }
    conv.iterations = iterations_;
    conv.capped = capped_;
  }

  const Vector &alphas() const { return alpha_; }

 private:
  bool InUp(Eigen::Index i) const {
    return y_[i] > 0 ? alpha_(i) < c_ : alpha_(i) > 0;
  }
  bool InLow(Eigen::Index i) const {
    return y_[i] > 0 ? alpha_(i) > 0 : alpha_(i) < c_;
  }
  bool IsFree(Eigen::Index i) const { return alpha_(i) > 0 && alpha_(i) < c_; }

  Scalar Dot(Eigen::Index i, Eigen::Index j) const {
    return x_.row(i).dot(x_.row(j));
  }

  // Exact b_low - b_up over all samples.
  Scalar GlobalGap() {
    Scalar up = std::numeric_limits<Scalar>::infinity();
    Scalar low = -up;
    for (Eigen::Index i = 0; i < n_; ++i) {
      const Scalar fi = x_.row(i).dot(w_) - y_[i];
      if (IsFree(i)) f_(i) = fi;
      if (InUp(i)) up = std::min(up, fi);
      if (InLow(i)) low = std::max(low, fi);
    }
    return low - up;
  }

  void SetFree(Eigen::Index i, bool now_free) {
    const bool was_free = free_pos_[i] >= 0;
    if (now_free == was_free) return;
    if (now_free) {
      free_pos_[i] = static_cast<Eigen::Index>(free_.size());
      free_.push_back(i);
    } else {
      const Eigen::Index pos = free_pos_[i];
      const Eigen::Index last = free_.back();
      free_[pos] = last;
      free_pos_[last] = pos;
      free_.pop_back();
      free_pos_[i] = -1;
    }
  }

  void ConsiderUp(Eigen::Index i) {
    if (f_(i) < b_up_ || (f_(i) == b_up_ && (i_up_ < 0 || i < i_up_))) {
      b_up_ = f_(i);
      i_up_ = i;
    }
  }
  void ConsiderLow(Eigen::Index i) {
    if (f_(i) > b_low_ || (f_(i) == b_low_ && (i_low_ < 0 || i < i_low_))) {
      b_low_ = f_(i);
      i_low_ = i;
    }
  }

  int ExamineExample(Eigen::Index i2) {
    Scalar f2;
    if (IsFree(i2)) {
      f2 = f_(i2);
    } else {
      f2 = x_.row(i2).dot(w_) - y_[i2];
      f_(i2) = f2;
      if (InUp(i2) && f2 < b_up_) {
        b_up_ = f2;
        i_up_ = i2;
      } else if (InLow(i2) && f2 > b_low_) {
        b_low_ = f2;
        i_low_ = i2;
      }
    }
    bool optimal = true;
    Eigen::Index i1 = -1;
    if (InUp(i2) && i_low_ >= 0 && b_low_ - f2 > tol_) {
      optimal = false;
      i1 = i_low_;
    }
    if (InLow(i2) && i_up_ >= 0 && f2 - b_up_ > tol_) {
      optimal = false;
      i1 = i_up_;
    }
    if (optimal) return 0;
    if (IsFree(i2) && i_low_ >= 0 && i_up_ >= 0)
      i1 = (b_low_ - f2 > f2 - b_up_) ? i_low_ : i_up_;
    if (TakeStep(i1, i2)) return 1;

    // Fallback: any free sample, then any sample, from a seeded offset.
    if (!free_.empty()) {
      std::vector<Eigen::Index> order(free_);
      std::sort(order.begin(), order.end());
      const auto start = rng_.NextBelow(order.size());
      for (std::size_t k = 0; k < order.size(); ++k)
        if (TakeStep(order[(start + k) % order.size()], i2)) return 1;
    }
    const auto start = rng_.NextBelow(static_cast<std::uint64_t>(n_));
    for (Eigen::Index k = 0; k < n_; ++k) {
      const Eigen::Index cand =
          static_cast<Eigen::Index>((start + static_cast<std::uint64_t>(k)) %
                                    static_cast<std::uint64_t>(n_));
      if (IsFree(cand)) continue;
      if (TakeStep(cand, i2)) return 1;
    }
    return 0;
  }

  bool TakeStep(Eigen::Index i1, Eigen::Index i2) {
    if (i1 == i2 || i1 < 0 || i2 < 0) return false;
    const Scalar a1 = alpha_(i1), a2 = alpha_(i2);
    const int y1 = y_[i1], y2 = y_[i2];
    // F of a non-free sample may be stale; refresh both ends.
    const Scalar f1 = IsFree(i1) ? f_(i1) : x_.row(i1).dot(w_) - y1;
    const Scalar f2 = IsFree(i2) ? f_(i2) : x_.row(i2).dot(w_) - y2;
    const int s = y1 * y2;

    Scalar lo, hi;
    if (s < 0) {
      lo = std::max<Scalar>(0, a2 - a1);
      hi = std::min<Scalar>(c_, c_ + a2 - a1);
    } else {
      lo = std::max<Scalar>(0, a1 + a2 - c_);
      hi = std::min<Scalar>(c_, a1 + a2);
    }
    if (!(lo < hi)) return false;

    const Scalar k11 = Dot(i1, i1), k22 = Dot(i2, i2), k12 = Dot(i1, i2);
    const Scalar eta = k11 + k22 - 2 * k12;
    // Objective (minimization form) along the constraint line, relative to
    // the current point, as a function of the new a2.
    const Scalar slope = y2 * (f2 - f1);
    auto delta_obj = [&](Scalar a) {
      const Scalar t = a - a2;
      return slope * t + Scalar(0.5) * eta * t * t;
    };
    Scalar a2n;
    if (eta > kEtaFloor * (k11 + k22)) {
      a2n = std::clamp(a2 + y2 * (f1 - f2) / eta, lo, hi);
    } else {
      const Scalar lobj = delta_obj(lo), hobj = delta_obj(hi);
      const Scalar margin = kObjEps * (std::abs(lobj) + std::abs(hobj) + 1);
      if (lobj < hobj - margin) a2n = lo;
      else if (hobj < lobj - margin) a2n = hi;
      else return false;
      if (!(delta_obj(a2n) < 0)) return false;
    }
    if (std::abs(a2n - a2) < kStepEps * (a2n + a2 + kStepEps)) return false;

    Scalar a1n = a1 + s * (a2 - a2n);
    if (a1n < kSnap * c_) a1n = 0;
    else if (a1n > c_ * (1 - kSnap)) a1n = c_;
    if (a2n < kSnap * c_) a2n = 0;
    else if (a2n > c_ * (1 - kSnap)) a2n = c_;

    const Vector dw = ((a1n - a1) * y1) * x_.row(i1).transpose() +
                      ((a2n - a2) * y2) * x_.row(i2).transpose();
    w_ += dw;
    alpha_(i1) = a1n;
    alpha_(i2) = a2n;

    for (Eigen::Index i : free_) f_(i) += x_.row(i).dot(dw);
    if (free_pos_[i1] < 0) f_(i1) = f1 + x_.row(i1).dot(dw);
    if (free_pos_[i2] < 0) f_(i2) = f2 + x_.row(i2).dot(dw);
    SetFree(i1, IsFree(i1));
    SetFree(i2, IsFree(i2));

    b_up_ = std::numeric_limits<Scalar>::infinity();
    b_low_ = -b_up_;
    i_up_ = i_low_ = -1;
    for (Eigen::Index i : free_) {
      ConsiderUp(i);
      ConsiderLow(i);
    }
    for (Eigen::Index i : {i1, i2}) {
      if (IsFree(i)) continue;
      if (InUp(i)) ConsiderUp(i);
      if (InLow(i)) ConsiderLow(i);
    }

    if (++iterations_ >= params_.max_iterations) capped_ = true;
    return true;
  }

  static constexpr Scalar kEtaFloor = Scalar(1e-12);
  static constexpr Scalar kObjEps = Scalar(1e-12);
  static constexpr Scalar kStepEps = Scalar(1e-14);
  static constexpr Scalar kSnap = Scalar(1e-12);

  const Matrix &x_;
  const std::vector<int> &y_;
  const Scalar c_, tol_;
  const SvmParams &params_;
  SplitMix64 rng_;
  const Eigen::Index n_;

  Vector alpha_, w_, f_;
  std::vector<Eigen::Index> free_;
  std::vector<Eigen::Index> free_pos_;
  Scalar b_up_, b_low_;
  Eigen::Index i_up_ = -1, i_low_ = -1;
  std::int64_t iterations_ = 0;
  bool capped_ = false;
};

}  // namespace detail

/// Trains on rows of `x` with labels `y` in {+1, -1}.
/// Errors: kSingleClass, kNonFiniteInput, kDimensionMismatch, kInvalidConfig,
/// and kDidNotConverge when the iteration cap was hit and the final KKT
/// violation exceeds 10 * tol.
template <typename Derived>
SvmModel<typename Derived::Scalar> TrainLinearSvm(
    const Eigen::MatrixBase<Derived> &x, std::span<const int> y,
    const SvmParams &params = {}) {
  using Scalar = typename Derived::Scalar;
  using RowMatrix =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  Validate(params);
  const Eigen::Index n = x.rows(), k = x.cols();
  if (static_cast<std::size_t>(n) != y.size())
    throw Error(ErrorKind::kDimensionMismatch,
                "svm: " + std::to_string(n) + " rows but " +
                    std::to_string(y.size()) + " labels");
  if (k < 1)
    throw Error(ErrorKind::kDimensionMismatch, "svm: need at least 1 feature");
  if (!x.allFinite())
    throw Error(ErrorKind::kNonFiniteInput, "svm: non-finite feature value");
  std::size_t npos = 0, nneg = 0;
  for (int label : y) {
    if (label == 1) ++npos;
    else if (label == -1) ++nneg;
    else
      throw Error(ErrorKind::kInvalidConfig, "svm: labels must be +1 or -1");
  }
  if (npos == 0 || nneg == 0)
    throw Error(ErrorKind::kSingleClass,
                "svm: both classes must be present (got " +
                    std::to_string(npos) + " positive, " +
                    std::to_string(nneg) + " negative)");

  SvmModel<Scalar> model;
  model.params = params;

  RowMatrix xs = x.template cast<Scalar>();
  if (params.standardize) {
    Standardization<Scalar> st;
    st.mean = xs.colwise().mean().transpose();
    st.scale.resize(k);
    for (Eigen::Index j = 0; j < k; ++j) {
      const Scalar var =
          (xs.col(j).array() - st.mean(j)).square().sum() / Scalar(n);
      st.scale(j) = var > 0 ? std::sqrt(var) : Scalar(1);
    }
    for (Eigen::Index i = 0; i < n; ++i)
      xs.row(i) = ((xs.row(i).transpose() - st.mean).array() / st.scale.array())
                      .matrix()
                      .transpose();
    model.standardization = st;
  }

  // Canonical order: by label, then lexicographically by features.
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  auto row_less = [&](Eigen::Index a, Eigen::Index b) {
    if (y[a] != y[b]) return y[a] > y[b];
    for (Eigen::Index j = 0; j < k; ++j)
      if (xs(a, j) != xs(b, j)) return xs(a, j) < xs(b, j);
    return false;
  };
  std::stable_sort(order.begin(), order.end(), row_less);

  RowMatrix xc(n, k);
  std::vector<int> yc(static_cast<std::size_t>(n));
  for (Eigen::Index r = 0; r < n; ++r) {
    xc.row(r) = xs.row(order[r]);
    yc[r] = y[order[r]];
  }

  detail::SmoSolver<Scalar> solver(xc, yc, params);
  solver.Solve(model.convergence);
  Vector ac = solver.alphas();

  // Identical (label, features) rows share their dual mass equally.
  for (Eigen::Index r = 0; r < n;) {
    Eigen::Index e = r + 1;
    while (e < n && !row_less(order[r], order[e])) ++e;
    if (e - r > 1) {
      const Scalar mean = ac.segment(r, e - r).mean();
      ac.segment(r, e - r)
          .setConstant(std::clamp(mean, Scalar(0), static_cast<Scalar>(params.c)));
    }
    r = e;
  }

  const Scalar c = static_cast<Scalar>(params.c);
  const Scalar eps = static_cast<Scalar>(params.AlphaEps());
  Vector w = Vector::Zero(k);
  for (Eigen::Index r = 0; r < n; ++r)
    if (ac(r) != 0) w += (ac(r) * yc[r]) * xc.row(r).transpose();

  // Bias from free support vectors; fall back to the middle of the feasible
  // interval [-b_low, -b_up].
  Scalar free_sum = 0;
  Eigen::Index free_count = 0;
  Scalar b_up = std::numeric_limits<Scalar>::infinity(), b_low = -b_up;
  for (Eigen::Index r = 0; r < n; ++r) {
    const Scalar f = xc.row(r).dot(w) - yc[r];
    const bool at_zero = ac(r) <= eps, at_c = ac(r) >= c - eps;
    if (!at_zero && !at_c) {
      free_sum += f;
      ++free_count;
    }
    const bool up = yc[r] > 0 ? !at_c : !at_zero;
    const bool low = yc[r] > 0 ? !at_zero : !at_c;
    if (up) b_up = std::min(b_up, f);
    if (low) b_low = std::max(b_low, f);
  }
  Scalar bias;
  if (free_count > 0) bias = -free_sum / Scalar(free_count);
  else if (std::isfinite(b_up) && std::isfinite(b_low))
    bias = -(b_up + b_low) / 2;
  else if (std::isfinite(b_up)) bias = -b_up;
  else bias = -b_low;

  model.weights = w;
  model.bias = bias;
  model.alphas.resize(n);
  for (Eigen::Index r = 0; r < n; ++r) model.alphas(order[r]) = ac(r);
  model.support_indices = SupportIndices(model.alphas, params.AlphaEps());
  model.convergence.gap =
      (std::isfinite(b_up) && std::isfinite(b_low)) ? b_low - b_up : 0;
  model.convergence.converged =
      !model.convergence.capped && model.convergence.gap <= params.tol;
  model.convergence.max_kkt_violation =
      static_cast<double>(MaxKktViolation(model, x, y));

  if (model.convergence.capped &&
      model.convergence.max_kkt_violation > 10 * params.tol)
    throw Error(ErrorKind::kDidNotConverge,
                "svm: iteration cap reached with KKT violation " +
                    std::to_string(model.convergence.max_kkt_violation));
  return model;
}

}  // namespace trialkit

#endif  // TRIALKIT_SVM_H_
