// tests/svm-test.cc


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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "doctest.h"
#include "qp-oracle.h"
#include "svm-instances.h"
#include "trialkit/error.h"
#include "trialkit/svm-io.h"
#include "trialkit/svm.h"

namespace trialkit {
namespace {

using testing::MakeSvmInstance;
using testing::SvmFamily;

ErrorKind KindOf(auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::kIo;
}

Eigen::MatrixXd Col(std::initializer_list<double> v) {
  Eigen::MatrixXd x(static_cast<Eigen::Index>(v.size()), 1);
  Eigen::Index i = 0;
  for (double d : v) x(i++, 0) = d;
  return x;
}

TEST_CASE("two points in one dimension") {
  std::vector<int> y{-1, 1};
  SvmModeld m = TrainLinearSvm(Col({-1, 1}), y);
  CHECK(m.weights(0) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(m.bias) < 1e-9);
  CHECK(m.alphas(0) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(m.alphas(1) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(m.support_indices == std::vector<Eigen::Index>{0, 1});
  CHECK(m.convergence.converged);

  auto oracle = testing::SolveSvmDualOracle(Col({-1, 1}), y, 1.0);
  CHECK(oracle.alphas(0) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(oracle.alphas(1) == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("a point beyond the margin gets zero weight") {
  std::vector<int> y{-1, 1, 1};
  SvmModeld m = TrainLinearSvm(Col({-1, 1, 3}), y);
  CHECK(m.weights(0) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(m.bias) < 1e-9);
  CHECK(m.alphas(2) == 0.0);
  CHECK(m.support_indices == std::vector<Eigen::Index>{0, 1});
}

TEST_CASE("input validation") {
  std::vector<int> pos{1, 1};
  CHECK(KindOf([&] { TrainLinearSvm(Col({0, 1}), pos); }) == ErrorKind::kSingleClass);
  std::vector<int> y{1, -1};
  CHECK(KindOf([&] { TrainLinearSvm(Col({0, std::nan("")}), y); }) ==
        ErrorKind::kNonFiniteInput);
  std::vector<int> three{1, -1, 1};
  CHECK(KindOf([&] { TrainLinearSvm(Col({0, 1}), three); }) ==
        ErrorKind::kDimensionMismatch);
  SvmParams p;
  p.c = 0;
  CHECK(KindOf([&] { TrainLinearSvm(Col({0, 1}), y, p); }) == ErrorKind::kInvalidConfig);
  p = {};
  p.tol = -1;
  CHECK(KindOf([&] { Validate(p); }) == ErrorKind::kInvalidConfig);
}

TEST_CASE("decision values") {
  SvmModeld m;
  m.weights = Eigen::VectorXd::Ones(1);
  m.bias = 0;
  CHECK(DecisionValue(m, Eigen::VectorXd::Constant(1, 0.5)) == 0.5);
  m.weights = Eigen::VectorXd::Zero(3);
  m.bias = 0.3;
  CHECK(DecisionValue(m, Eigen::Vector3d(4, -2, 9)) == 0.3);
  CHECK(KindOf([&] { DecisionValue(m, Eigen::VectorXd::Zero(2)); }) ==
        ErrorKind::kDimensionMismatch);
}

TEST_CASE("support indices use a strict threshold") {
  Eigen::Vector3d a(0.5, 0.5, 0.0);
  CHECK(SupportIndices(a, 1e-8) == std::vector<Eigen::Index>{0, 1});
  Eigen::Vector3d edge(1e-8, 2e-8, 0.0);
  CHECK(SupportIndices(edge, 1e-8) == std::vector<Eigen::Index>{1});
}

void CheckModelInvariants(const testing::SvmInstance &in, const SvmModeld &m,
                          double tol) {
  const Eigen::Index n = in.x.rows();
  double balance = 0;
  Eigen::VectorXd w = Eigen::VectorXd::Zero(in.x.cols());
  for (Eigen::Index i = 0; i < n; ++i) {
    CHECK(m.alphas(i) >= 0.0);
    CHECK(m.alphas(i) <= in.c);
    balance += m.alphas(i) * in.y[i];
    w += m.alphas(i) * in.y[i] * in.x.row(i).transpose();
  }
  CHECK(std::abs(balance) <= 1e-6 * in.c * n);
  CHECK((w - m.weights).cwiseAbs().maxCoeff() <= 1e-9 * (1 + w.cwiseAbs().maxCoeff()));
  CHECK(MaxKktViolation(m, in.x, in.y) <= tol * (1 + 1e-9));
  CHECK(m.convergence.converged);
  CHECK_FALSE(m.support_indices.empty());
}

TEST_CASE("kkt conditions hold on random instances") {
  SplitMix64 rng(4242);
  for (int iter = 0; iter < 120; ++iter) {
    const SvmFamily fam = static_cast<SvmFamily>(iter % 3);
    const Eigen::Index n = static_cast<Eigen::Index>(testing::IntIn(rng, 4, 200));
    const Eigen::Index k = static_cast<Eigen::Index>(testing::IntIn(rng, 1, 8));
    const double c = std::pow(10.0, testing::Uniform(rng, -1, 1.5));
    auto in = MakeSvmInstance(rng, fam, n, k, c);
    SvmParams p;
    p.c = c;
    CAPTURE(iter);
    CheckModelInvariants(in, TrainLinearSvm(in.x, in.y, p), p.tol);
  }
}

TEST_CASE("small instances agree with the qp oracle") {
  SplitMix64 rng(777);
  for (int iter = 0; iter < 60; ++iter) {
    const SvmFamily fam = static_cast<SvmFamily>(iter % 3);
    const Eigen::Index n = static_cast<Eigen::Index>(testing::IntIn(rng, 2, 12));
    const Eigen::Index k = static_cast<Eigen::Index>(testing::IntIn(rng, 1, 3));
    const double c = std::pow(10.0, testing::Uniform(rng, -1, 1));
    auto in = MakeSvmInstance(rng, fam, n, k, c);
    SvmParams p;
    p.c = c;
    p.tol = 1e-9;
    SvmModeld m = TrainLinearSvm(in.x, in.y, p);
    auto oracle = testing::SolveSvmDualOracle(in.x, in.y, c);
    CAPTURE(iter);
    CHECK(std::abs(DualObjective(in.x, in.y, m.alphas) - oracle.objective) <= 1e-6);
    CHECK(m.support_indices == SupportIndices(oracle.alphas, p.AlphaEps()));
  }
}

TEST_CASE("sample order does not matter") {
  SplitMix64 rng(31);
  for (int iter = 0; iter < 40; ++iter) {
    const SvmFamily fam = static_cast<SvmFamily>(iter % 3);
    auto in = MakeSvmInstance(rng, fam, static_cast<Eigen::Index>(testing::IntIn(rng, 4, 80)),
                              static_cast<Eigen::Index>(testing::IntIn(rng, 1, 5)), 1.0);
    SvmModeld ref = TrainLinearSvm(in.x, in.y);
    std::vector<Eigen::Index> perm(in.y.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (std::size_t i = perm.size(); i > 1; --i)
      std::swap(perm[i - 1], perm[rng.NextBelow(i)]);
    Eigen::MatrixXd xp(in.x.rows(), in.x.cols());
    std::vector<int> yp(in.y.size());
    for (std::size_t i = 0; i < perm.size(); ++i) {
      xp.row(i) = in.x.row(perm[i]);
      yp[i] = in.y[perm[i]];
    }
    SvmModeld m = TrainLinearSvm(xp, yp);
    CHECK((m.weights - ref.weights).cwiseAbs().maxCoeff() <= 1e-8);
    CHECK(std::abs(m.bias - ref.bias) <= 1e-8);
    std::vector<Eigen::Index> mapped;
    for (auto i : m.support_indices) mapped.push_back(perm[i]);
    std::sort(mapped.begin(), mapped.end());
    CHECK(mapped == ref.support_indices);
  }
}

TEST_CASE("identical rows share their dual weight") {
  Eigen::MatrixXd x(5, 2);
  x << 0, 0, 0, 0, 1, 1, 1, 1, 2, 2;
  std::vector<int> y{-1, -1, 1, 1, 1};
  SvmModeld m = TrainLinearSvm(x, y);
  CHECK(m.alphas(0) == m.alphas(1));
  CHECK(m.alphas(2) == m.alphas(3));
}

TEST_CASE("contradictory duplicates still reach the optimum") {
  SplitMix64 rng(13);
  for (int iter = 0; iter < 40; ++iter) {
    auto in = MakeSvmInstance(rng, SvmFamily::kSoftMargin, 8, 2, 2.0);
    in.x.row(7) = in.x.row(0);
    in.y[7] = -in.y[0];
    SvmParams p;
    p.c = 2.0;
    p.tol = 1e-9;
    SvmModeld m = TrainLinearSvm(in.x, in.y, p);
    auto oracle = testing::SolveSvmDualOracle(in.x, in.y, 2.0);
    CHECK(std::abs(DualObjective(in.x, in.y, m.alphas) - oracle.objective) <= 1e-6);
    CHECK(MaxKktViolation(m, in.x, in.y) <= 1e-6);
  }
}

TEST_CASE("standardization") {
  SplitMix64 rng(8);
  auto in = MakeSvmInstance(rng, SvmFamily::kSoftMargin, 60, 3, 1.0);
  in.x.col(1) *= 1000.0;
  in.x.col(2).array() += 50.0;
  SvmParams p;
  p.standardize = true;
  SvmModeld m = TrainLinearSvm(in.x, in.y, p);
  REQUIRE(m.standardization.has_value());
  CHECK(MaxKktViolation(m, in.x, in.y) <= p.tol * (1 + 1e-9));
  Eigen::MatrixXd z = in.x;
  for (Eigen::Index j = 0; j < 3; ++j)
    z.col(j) = (z.col(j).array() - m.standardization->mean(j)) /
               m.standardization->scale(j);
  SvmModeld raw = TrainLinearSvm(z, in.y);
  CHECK((raw.weights - m.weights).cwiseAbs().maxCoeff() <= 1e-9);
  CHECK(raw.support_indices == m.support_indices);
}

TEST_CASE("single precision instantiation") {
  SplitMix64 rng(9);
  auto in = MakeSvmInstance(rng, SvmFamily::kSoftMargin, 40, 2, 1.0);
  Eigen::MatrixXf xf = in.x.cast<float>();
  SvmModel<float> m = TrainLinearSvm(xf, in.y);
  SvmModeld d = TrainLinearSvm(in.x, in.y);
  CHECK(m.convergence.converged);
  CHECK((m.weights.cast<double>() - d.weights).norm() <= 1e-2 * (1 + d.weights.norm()));
}

TEST_CASE("iteration cap raises DidNotConverge") {
  SplitMix64 rng(10);
  auto in = MakeSvmInstance(rng, SvmFamily::kSoftMargin, 150, 4, 10.0);
  SvmParams p;
  p.c = 10.0;
  p.max_iterations = 2;
  CHECK(KindOf([&] { TrainLinearSvm(in.x, in.y, p); }) == ErrorKind::kDidNotConverge);
}

TEST_CASE("model file round trip") {
  SplitMix64 rng(12);
  auto in = MakeSvmInstance(rng, SvmFamily::kSoftMargin, 50, 4, 1.0);
  SvmParams p;
  p.standardize = true;
  SvmModeld m = TrainLinearSvm(in.x, in.y, p);
  const std::string text = WriteSvmModel(m);
  SvmModeld back = ReadSvmModel(text);
  CHECK(back.weights == m.weights);
  CHECK(back.bias == m.bias);
  CHECK(back.alphas == m.alphas);
  CHECK(back.support_indices == m.support_indices);
  REQUIRE(back.standardization.has_value());
  CHECK(back.standardization->scale == m.standardization->scale);
  CHECK(back.convergence.iterations == m.convergence.iterations);
  CHECK(WriteSvmModel(back) == text);
  CHECK(KindOf([] { ReadSvmModel("{\"format\": 3}"); }) == ErrorKind::kMalformedLine);
  CHECK(KindOf([] { ReadSvmModel("not json"); }) == ErrorKind::kMalformedLine);
}

}  // namespace
}  // namespace trialkit
