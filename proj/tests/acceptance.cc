// tests/acceptance.cc


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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "cli.h"
#include "qp-oracle.h"
#include "svm-instances.h"
#include "test-util.h"
#include "trialkit/error.h"
#include "trialkit/metrics.h"
#include "trialkit/miner.h"
#include "trialkit/scorestore.h"
#include "trialkit/simlab.h"
#include "trialkit/svm.h"
#include "trialkit/text-util.h"
#include "trialkit/trialset.h"

namespace trialkit {
namespace {

using Clock = std::chrono::steady_clock;
using testing::Normal;
using testing::Phi;
using testing::Uniform;

// Solver tolerances for the oracle comparisons; see README.
constexpr double kOracleTol = 1e-8;
constexpr double kSufficiencyTol = 1e-8;

struct Outcome {
  bool pass = true;
  std::string detail;

  void Require(bool ok, const std::string &what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

double Seconds(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string Fmt(const char *fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

int RunCliQuiet(const std::vector<std::string> &args, std::string *out = nullptr) {
  std::ostringstream o, e;
  const int code = RunCli(args, o, e);
  if (out) *out = o.str();
  return code;
}

// 1. Step-0 EERs of the default simulation against the Gaussian closed forms.
Outcome GaussianBaseline() {
  Outcome o;
  const auto t0 = Clock::now();
  SimConfig cfg;
  cfg.steps = 0;
  SimResult res = RunSimulation(cfg);
  const double secs = Seconds(t0);
  const double e1 = res.aggregate[0].eer_sys1.mean;
  const double e2 = res.aggregate[0].eer_sys2.mean;
  o.Require(cfg.repeats == 10, "default repeats is not 10");
  o.Require(std::abs(e1 - Phi(-0.5)) <= 0.015, "System I mean EER off");
  o.Require(std::abs(e2 - Phi(-0.75)) <= 0.015, "System II mean EER off");
  o.Require(secs < 30.0, "too slow");
  o.detail = Fmt("EER I %.3f%% (closed form %.3f%%), EER II %.3f%% (%.3f%%), %.2f s",
                 100 * e1, 100 * Phi(-0.5), 100 * e2, 100 * Phi(-0.75), secs) +
             (o.pass ? "" : "; " + o.detail);
  return o;
}

// 2. Easy-trial injection lowers both EERs and the relative reduction.
Outcome InjectionTrend() {
  Outcome o;
  const auto t0 = Clock::now();
  std::string summary;
  for (InjectionMode mode : {InjectionMode::kNegOnly, InjectionMode::kPosOnly}) {
    SimConfig cfg;
    cfg.steps = 200;
    cfg.batch_size = 500;
    cfg.repeats = 10;
    cfg.mode = mode;
    SimResult res = RunSimulation(cfg);
    const SimAggregate &first = res.aggregate.front(), &last = res.aggregate.back();
    const std::string m(InjectionModeName(mode));
    o.Require(last.eer_sys1.mean < first.eer_sys1.mean, m + ": System I EER did not drop");
    o.Require(last.eer_sys2.mean < first.eer_sys2.mean, m + ": System II EER did not drop");
    o.Require(last.rel_reduction.mean < first.rel_reduction.mean,
              m + ": relative reduction did not drop");
    summary += Fmt("%s: rel %.4f -> %.4f; ", m.c_str(), first.rel_reduction.mean,
                   last.rel_reduction.mean);
  }
  const double secs = Seconds(t0);
  o.Require(secs < 180.0, "too slow");
  o.detail = summary + Fmt("%.1f s", secs) + (o.pass ? "" : "; " + o.detail);
  return o;
}

// 3. rFAR equals k/(N-m) and ignores easy negatives, bit for bit.
Outcome RfarIndependence() {
  Outcome o;
  SplitMix64 rng(2023);
  double worst = 0;
  std::size_t total_easy = 0;
  for (int inst = 0; inst < 1000 && o.pass; ++inst) {
    const std::size_t n = testing::IntIn(rng, 1, 2000);
    const std::size_t m = testing::IntIn(rng, 0, n - 1);
    const std::size_t k = testing::IntIn(rng, 0, n - m);
    const double thr = Uniform(rng, -5, 5);
    std::vector<double> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = i < m ? thr - Uniform(rng, 1e-6, 3) : thr + Uniform(rng, 0, 3);
      b[i] = i < m + k ? thr - Uniform(rng, 1e-6, 3) : thr + Uniform(rng, 0, 3);
    }
    // Shuffle so the correct rejections are not a prefix.
    for (std::size_t i = n; i > 1; --i) {
      const std::size_t j = rng.NextBelow(i);
      std::swap(a[i - 1], a[j]);
      std::swap(b[i - 1], b[j]);
    }
    const double r0 = RelativeFarChange(a, b, thr);
    const double expect = static_cast<double>(k) / static_cast<double>(n - m);
    worst = std::max(worst, std::abs(r0 - expect));
    o.Require(std::abs(r0 - expect) <= 1e-12, Fmt("instance %d: %.17g vs %.17g", inst, r0, expect));
    const std::size_t s = testing::IntIn(rng, 0, 100000);
    total_easy += s;
    for (std::size_t i = 0; i < s; ++i) {
      a.push_back(thr - Uniform(rng, 1e-6, 10));
      b.push_back(thr - Uniform(rng, 1e-6, 10));
    }
    const double r1 = RelativeFarChange(a, b, thr);
    o.Require(std::memcmp(&r0, &r1, sizeof r0) == 0, Fmt("instance %d: value changed", inst));
  }
  const std::string d = Fmt("1000 instances, %zu easy negatives appended, max |rFAR - k/(N-m)| = %.3g",
                            total_easy, worst);
  o.detail = o.pass ? d : o.detail;
  return o;
}

// 4. SMO against the projected-gradient oracle on every small configuration.
Outcome OracleEquivalence() {
  Outcome o;
  SplitMix64 rng(404);
  int instances = 0;
  double worst_obj = 0, worst_residual = 0;
  for (auto fam : {testing::SvmFamily::kSeparable, testing::SvmFamily::kSoftMargin,
                   testing::SvmFamily::kDuplicated}) {
    for (Eigen::Index n = 2; n <= 12; ++n) {
      for (Eigen::Index k = 1; k <= 3; ++k) {
        for (double c : {0.1, 1.0, 10.0}) {
          auto in = testing::MakeSvmInstance(rng, fam, n, k, c);
          SvmParams p;
          p.c = c;
          p.tol = kOracleTol;
          SvmModeld m = TrainLinearSvm(in.x, in.y, p);
          auto oracle = testing::SolveSvmDualOracle(in.x, in.y, c, 1e-13);
          ++instances;
          worst_residual = std::max(worst_residual, oracle.residual);
          const double gap = std::abs(DualObjective(in.x, in.y, m.alphas) - oracle.objective);
          worst_obj = std::max(worst_obj, gap);
          const std::string where =
              Fmt("%s n=%ld K=%ld c=%g", testing::SvmFamilyName(fam), static_cast<long>(n),
                  static_cast<long>(k), c);
          o.Require(oracle.residual <= 1e-10, where + ": oracle did not converge");
          o.Require(gap <= 1e-6, where + Fmt(": objective gap %.3g", gap));
          o.Require(m.support_indices == SupportIndices(oracle.alphas, p.AlphaEps()),
                    where + ": support sets differ");
        }
      }
    }
  }
  o.Require(instances >= 200, "too few instances");
  const std::string d = Fmt("%d instances, max objective gap %.3g, max oracle residual %.3g",
                            instances, worst_obj, worst_residual);
  o.detail = o.pass ? d : d + "; " + o.detail;
  return o;
}

// 5. Retraining on the support vectors alone reproduces (w, b).
Outcome SupportSufficiency() {
  Outcome o;
  SplitMix64 rng(505);
  double worst = 0;
  for (int inst = 0; inst < 50; ++inst) {
    const auto fam = inst % 2 ? testing::SvmFamily::kSoftMargin : testing::SvmFamily::kSeparable;
    const Eigen::Index n = static_cast<Eigen::Index>(testing::IntIn(rng, 20, 200));
    const double c = std::pow(10.0, Uniform(rng, -1, 1));
    auto in = testing::MakeSvmInstance(rng, fam, n, 8, c);
    SvmParams p;
    p.c = c;
    p.tol = kSufficiencyTol;
    SvmModeld full = TrainLinearSvm(in.x, in.y, p);
    const auto &sv = full.support_indices;
    Eigen::MatrixXd xs(static_cast<Eigen::Index>(sv.size()), 8);
    std::vector<int> ys;
    for (std::size_t r = 0; r < sv.size(); ++r) {
      xs.row(static_cast<Eigen::Index>(r)) = in.x.row(sv[r]);
      ys.push_back(in.y[static_cast<std::size_t>(sv[r])]);
    }
    SvmModeld sub = TrainLinearSvm(xs, ys, p);
    Eigen::VectorXd a(9), b(9);
    a << full.weights, full.bias;
    b << sub.weights, sub.bias;
    const double rel = (a - b).norm() / a.norm();
    worst = std::max(worst, rel);
    o.Require(rel <= 1e-4, Fmt("instance %d (%s, n=%ld): relative error %.3g", inst,
                               testing::SvmFamilyName(fam), static_cast<long>(n), rel));
  }
  const std::string d = Fmt("50 instances, K=8, max relative (w,b) error %.3g", worst);
  o.detail = o.pass ? d : d + "; " + o.detail;
  return o;
}

// 6. Held-out scorers are worse on the mined subset than on the full set.
Outcome MiningDegradation() {
  Outcome o;
  SplitMix64 rng(606);
  const std::size_t n = 10000;
  const int kSystems = 8, kHeldOut = 6;
  std::vector<Trial> trials;
  std::vector<double> latent(n);
  std::size_t band = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const bool tgt = rng.NextBelow(4) == 0;
    trials.push_back({"e" + std::to_string(i / 100), "t" + std::to_string(i),
                      tgt ? Label::kTarget : Label::kNontarget});
    const double sign = tgt ? 1.0 : -1.0;
    const bool boundary = rng.NextBelow(10) == 0;
    band += boundary;
    // Easy trials sit well inside their class; the band straddles zero.
    latent[i] = boundary ? sign * 0.3 + 0.5 * Normal(rng)
                         : sign * (2.0 + std::abs(Normal(rng)));
  }
  TrialSet set(trials, "synthetic");
  // Scores = latent + shared nuisance + private noise, so columns correlate.
  auto scorer = [&](double noise) {
    std::vector<double> s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = latent[i] + noise * Normal(rng);
    return s;
  };
  std::vector<double> nuisance(n);
  for (auto &v : nuisance) v = Normal(rng);
  ScoreTable table;
  table.trial_set_name = set.name();
  table.scores.resize(static_cast<Eigen::Index>(n), kSystems);
  for (int j = 0; j < kSystems; ++j) {
    std::vector<double> s = scorer(0.3 + 0.05 * j);
    for (std::size_t i = 0; i < n; ++i)
      table.scores(static_cast<Eigen::Index>(i), j) = s[i] + 0.2 * nuisance[i];
    table.system_names.push_back("sys" + std::to_string(j));
    table.extra_ignored.push_back(0);
  }
  const auto t0 = Clock::now();
  MiningResult mined = MineHardTrials(set, table);
  const double secs = Seconds(t0);
  std::vector<std::size_t> hard_idx(mined.report.model.support_indices.begin(),
                                    mined.report.model.support_indices.end());
  std::string d = Fmt("%zu trials (%zu in band), %zu hard (%.3f), SVM %.1f s; EER full->hard:",
                      n, band, hard_idx.size(), mined.report.hard_fraction, secs);
  for (int h = 0; h < kHeldOut; ++h) {
    std::vector<double> s = scorer(0.25 + 0.1 * h);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] += 0.1 * (h % 3) * nuisance[i];
      if (h % 2) s[i] = std::tanh(s[i]);  // monotone warp
    }
    std::vector<double> hs;
    for (std::size_t i : hard_idx) hs.push_back(s[i]);
    const double full = Eer(MakeScoredTrials(set, s)).value;
    const double hard = Eer(MakeScoredTrials(mined.hard, hs)).value;
    d += Fmt(" %.2f%%->%.2f%%", 100 * full, 100 * hard);
    o.Require(hard > full, Fmt("held-out scorer %d not degraded", h));
  }
  o.detail = o.pass ? d : d + "; " + o.detail;
  return o;
}

// 7. cmd_pair counts against explicit enumeration for N, K <= 6.
Outcome PairCounting() {
  Outcome o;
  auto dir = testing::ScratchDir("accept-pair");
  int cases = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t k = 1; k <= 6; ++k) {
      std::string utt2spk;
      std::vector<std::pair<std::string, std::string>> utts;  // (utt, spk)
      for (std::size_t s = 0; s < n; ++s)
        for (std::size_t u = 0; u < k; ++u) {
          utts.emplace_back("s" + std::to_string(s) + "u" + std::to_string(u),
                            "s" + std::to_string(s));
          utt2spk += utts.back().first + " " + utts.back().second + "\n";
        }
      const std::string in = (dir / "utt2spk").string(), out = (dir / "trials").string();
      WriteStringToFile(in, utt2spk);
      std::string printed;
      const int code = RunCliQuiet({"pair", "--utt2spk", in, "--out", out}, &printed);
      ++cases;
      const std::string where = Fmt("N=%zu K=%zu", n, k);
      o.Require(code == 0, where + ": exit " + std::to_string(code));
      std::set<std::tuple<std::string, std::string, std::string>> expect;
      for (const auto &[ue, se] : utts)
        for (const auto &[ut, st] : utts)
          if (ue != ut) expect.emplace(ue, ut, se == st ? "target" : "nontarget");
      std::size_t enum_t = 0;
      for (const auto &e : expect) enum_t += std::get<2>(e) == "target";
      const std::size_t enum_n = expect.size() - enum_t;
      o.Require(enum_t == n * k * (k - 1) && enum_n == n * (n - 1) * k * k,
                where + ": enumeration disagrees with the closed form");
      o.Require(printed == Fmt("target=%zu nontarget=%zu\n", enum_t, enum_n),
                where + ": printed '" + printed + "'");
      std::set<std::tuple<std::string, std::string, std::string>> got;
      std::istringstream lines(ReadFileToString(out));
      std::string e, t, l;
      std::size_t rows = 0;
      while (lines >> e >> t >> l) {
        got.emplace(e, t, l);
        ++rows;
      }
      o.Require(got == expect && rows == expect.size(), where + ": trial file differs");
    }
  }
  if (o.pass) o.detail = Fmt("%d catalogs, counts and pair sets match enumeration", cases);
  return o;
}

// 8. Same seed, same bytes, for simulate and mine.
Outcome Determinism() {
  Outcome o;
  auto dir = testing::ScratchDir("accept-det");
  auto p = [&](const std::string &f) { return (dir / f).string(); };
  std::string out1, out2;
  for (int run = 0; run < 2; ++run) {
    const std::string tag = std::to_string(run);
    const int code = RunCliQuiet(
        {"simulate", "--mode", "both", "--steps", "30", "--repeats", "4", "--seed", "7",
         "--per-repeat", "--threads", run ? "1" : "4", "--out-csv", p("sim" + tag + ".csv"),
         "--out-plot", p("sim" + tag + ".svg")},
        run ? &out2 : &out1);
    o.Require(code == 0, "simulate failed");
  }
  o.Require(ReadFileToString(p("sim0.csv")) == ReadFileToString(p("sim1.csv")), "simulate CSV differs");
  o.Require(ReadFileToString(p("sim0.svg")) == ReadFileToString(p("sim1.svg")), "simulate SVG differs");
  o.Require(out1 == out2, "simulate stdout differs");

  SplitMix64 rng(808);
  std::string trials;
  std::vector<std::string> systems(8);
  for (int i = 0; i < 3000; ++i) {
    const bool tgt = rng.NextBelow(3) == 0;
    const std::string key = "e" + std::to_string(i % 50) + " t" + std::to_string(i);
    trials += key + (tgt ? " target\n" : " nontarget\n");
    const double base = (tgt ? 1.0 : -1.0) * std::abs(Normal(rng)) * 1.5;
    for (auto &s : systems) s += key + " " + ShortestDecimal(base + 0.6 * Normal(rng)) + "\n";
  }
  WriteStringToFile(p("trials"), trials);
  std::vector<std::string> score_files;
  for (int j = 0; j < 8; ++j) {
    score_files.push_back(p("sys" + std::to_string(j) + ".txt"));
    WriteStringToFile(score_files.back(), systems[j]);
  }
  for (int run = 0; run < 2; ++run) {
    const std::string tag = std::to_string(run);
    std::vector<std::string> args = {"mine", "--trials", p("trials"), "--out-hard",
                                     p("hard" + tag), "--out-stats", p("stats" + tag),
                                     "--out-model", p("model" + tag), "--scores"};
    args.insert(args.end(), score_files.begin(), score_files.end());
    o.Require(RunCliQuiet(args, run ? &out2 : &out1) == 0, "mine failed");
  }
  for (const char *f : {"hard", "stats", "model"})
    o.Require(ReadFileToString(p(std::string(f) + "0")) == ReadFileToString(p(std::string(f) + "1")),
              std::string("mine ") + f + " output differs");
  o.Require(out1 == out2, "mine stdout differs");
  if (o.pass)
    o.detail = "simulate (CSV, SVG; 4 vs 1 threads) and mine (hard list, stats, model) byte-identical";
  return o;
}

// 9. Enumerated metric examples and monotone-transform invariance.
Outcome MetricsSuite() {
  Outcome o;
  const double eer = Eer(MakeScoredTrials(std::vector<double>{1, 2, 3, 4},
                                          std::vector<double>{-2, -1, 0, 1.5}))
                         .value;
  o.Require(eer == 0.25, Fmt("EER example gave %.17g", eer));
  const double dcf = MinDcf(MakeScoredTrials(std::vector<double>{1, -0.5},
                                             std::vector<double>{0, -2}),
                            {0.5, 1.0, 1.0})
                         .value;
  o.Require(dcf == 0.5, Fmt("minDCF example gave %.17g", dcf));
  SplitMix64 rng(909);
  for (int inst = 0; inst < 100; ++inst) {
    std::vector<double> t(testing::IntIn(rng, 1, 200)), n(testing::IntIn(rng, 1, 200));
    const bool ties = inst % 2;
    for (auto &s : t) s = ties ? std::round(2 * Normal(rng) + 1) : Normal(rng) + 1;
    for (auto &s : n) s = ties ? std::round(2 * Normal(rng)) : Normal(rng);
    const double e0 = Eer(MakeScoredTrials(t, n)).value;
    for (int f = 0; f < 3; ++f) {
      auto tr = [f](double s) {
        return f == 0 ? std::exp(s) : f == 1 ? s * s * s + 2 * s + 1 : std::atan(3 * s);
      };
      std::vector<double> t2, n2;
      for (double s : t) t2.push_back(tr(s));
      for (double s : n) n2.push_back(tr(s));
      o.Require(Eer(MakeScoredTrials(t2, n2)).value == e0,
                Fmt("instance %d transform %d changed the EER", inst, f));
    }
  }
  if (o.pass) o.detail = "EER=0.25 and minDCF=0.5 exact; 100 instances x 3 transforms invariant";
  return o;
}

}  // namespace
}  // namespace trialkit

int main() {
  using namespace trialkit;
  const std::vector<std::pair<const char *, std::function<Outcome()>>> criteria = {
      {"Gaussian EER baseline", GaussianBaseline},
      {"Easy-trial injection trend", InjectionTrend},
      {"rFAR independent of easy negatives", RfarIndependence},
      {"SVM matches QP oracle", OracleEquivalence},
      {"Support-set sufficiency", SupportSufficiency},
      {"Mining degrades held-out scorers", MiningDegradation},
      {"Cross-pair counting", PairCounting},
      {"Determinism", Determinism},
      {"Metrics unit suite", MetricsSuite},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception &e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.pass;
    std::cout << "criterion " << i + 1 << " [" << criteria[i].first
              << "]: " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail
              << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size()
            << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
