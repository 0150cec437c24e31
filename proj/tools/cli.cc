// tools/cli.cc

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

#include "cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "CLI11.hpp"
#include "trialkit/error.h"
#include "trialkit/metrics.h"
#include "trialkit/miner.h"
#include "trialkit/scorestore.h"
#include "trialkit/simlab.h"
#include "trialkit/svm-io.h"
#include "trialkit/text-util.h"
#include "trialkit/trialset.h"

namespace trialkit {

namespace {

std::string Stem(const std::string &path) {
  return std::filesystem::path(path).stem().string();
}

std::ifstream OpenInput(const std::string &path) {
  std::ifstream is(path);
  if (!is) throw Error(ErrorKind::kIo, "cannot open " + path);
  return is;
}

TrialFormat ParseFormatName(const std::string &name) {
  if (name == "kaldi") return TrialFormat::kKaldi;
  if (name == "voxceleb") return TrialFormat::kVoxCeleb;
  return TrialFormat::kAuto;
}

TrialFormat DetectFileFormat(const std::string &path) {
  auto is = OpenInput(path);
  std::string line;
  while (std::getline(is, line))
    if (!SplitFields(line).empty()) return DetectTrialFormat(line);
  return TrialFormat::kKaldi;
}

TrialSet LoadTrials(const std::string &path, TrialFormat format) {
  auto is = OpenInput(path);
  return ParseTrials(is, format, Stem(path));
}

ScoreList LoadScores(const std::string &path) {
  auto is = OpenInput(path);
  return ParseScores(is, Stem(path));
}

std::vector<ScoreList> LoadScoreLists(const std::vector<std::string> &paths) {
  std::vector<ScoreList> lists;
  for (const auto &p : paths) lists.push_back(LoadScores(p));
  return lists;
}

void ReportExtras(const ScoreTable &t, std::ostream &err) {
  for (std::size_t j = 0; j < t.extra_ignored.size(); ++j)
    if (t.extra_ignored[j] > 0)
      err << "note: " << t.system_names[j] << ": ignored "
          << t.extra_ignored[j] << " score(s) not in the trial list\n";
}

std::string Echo(const std::string &cmd,
                 const std::vector<std::pair<std::string, std::string>> &kv) {
  std::string s = "trialkit " + cmd + ":";
  for (const auto &[k, v] : kv) s += " " + k + "=" + v;
  return s + "\n";
}

std::string Join(const std::vector<std::string> &v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i];
  return s;
}

// --- pair -------------------------------------------------------------------

struct PairOpts {
  std::string utt2spk, out, format = "kaldi";
  bool symmetric_dedup = false, include_self = false;
};

int CmdPair(const PairOpts &o, std::ostream &out, std::ostream &err) {
  err << Echo("pair", {{"utt2spk", o.utt2spk},
                       {"out", o.out},
                       {"format", o.format},
                       {"symmetric_dedup", o.symmetric_dedup ? "1" : "0"},
                       {"include_self_pairs", o.include_self ? "1" : "0"}});
  auto is = OpenInput(o.utt2spk);
  UtteranceCatalog catalog = UtteranceCatalog::FromUtt2Spk(is);
  CrossPairOptions opts;
  opts.symmetric_dedup = o.symmetric_dedup;
  opts.include_self_pairs = o.include_self;
  TrialSet set = CrossPair(catalog, opts, Stem(o.out));
  WriteStringToFile(o.out, WriteTrials(set, ParseFormatName(o.format)));
  out << "target=" << set.CountTargets()
      << " nontarget=" << set.CountNontargets() << "\n";
  return kExitOk;
}

// --- eval -------------------------------------------------------------------

struct DcfOpts {
  double p_target = 0.01, c_miss = 1.0, c_fa = 1.0;
  DcfParams Params() const { return {p_target, c_miss, c_fa}; }
};

struct EvalOpts {
  std::string trials, scores, trial_format = "auto", out_curve;
  DcfOpts dcf;
};

int CmdEval(const EvalOpts &o, std::ostream &out, std::ostream &err) {
  err << Echo("eval", {{"trials", o.trials},
                       {"scores", o.scores},
                       {"trial_format", o.trial_format},
                       {"p_target", ShortestDecimal(o.dcf.p_target)},
                       {"c_miss", ShortestDecimal(o.dcf.c_miss)},
                       {"c_fa", ShortestDecimal(o.dcf.c_fa)}});
  Validate(o.dcf.Params());
  TrialSet set = LoadTrials(o.trials, ParseFormatName(o.trial_format));
  ScoreTable table = Align(set, {LoadScores(o.scores)});
  ReportExtras(table, err);
  ScoredTrials data = MakeScoredTrials(set, SystemScores(table, 0));
  DetectionReport r = Evaluate(data, o.dcf.Params());
  const std::string p = ShortestDecimal(o.dcf.p_target);
  out << "# EER(%) and minDCF (p-target = " << p << ")\n";
  out << "EER(%) " << FormatEerPercent(r.eer) << " minDCF(p-target=" << p
      << ") " << FormatMinDcf(r.min_dcf) << "\n";
  err << "eer_threshold=" << ShortestDecimal(r.eer_threshold)
      << " min_dcf_threshold=" << ShortestDecimal(r.min_dcf_threshold) << "\n";
  if (!o.out_curve.empty()) {
    std::string csv = "threshold,far,frr\n";
    for (const auto &pt : r.curve)
      csv += ShortestDecimal(pt.threshold) + ',' + ShortestDecimal(pt.far) +
             ',' + ShortestDecimal(pt.frr) + '\n';
    WriteStringToFile(o.out_curve, csv);
  }
  return kExitOk;
}

// --- compare ----------------------------------------------------------------

struct CompareOpts {
  std::string trials, scores_a, scores_b, trial_format = "auto";
  std::optional<double> threshold;
};

int CmdCompare(const CompareOpts &o, std::ostream &out, std::ostream &err) {
  err << Echo("compare",
              {{"trials", o.trials},
               {"scores_a", o.scores_a},
               {"scores_b", o.scores_b},
               {"trial_format", o.trial_format},
               {"threshold",
                o.threshold ? ShortestDecimal(*o.threshold) : "none"}});
  TrialSet set = LoadTrials(o.trials, ParseFormatName(o.trial_format));
  ScoreTable table = Align(set, {LoadScores(o.scores_a), LoadScores(o.scores_b)});
  ReportExtras(table, err);
  ScoredTrials a = MakeScoredTrials(set, SystemScores(table, 0));
  ScoredTrials b = MakeScoredTrials(set, SystemScores(table, 1));
  const double eer_a = Eer(a).value, eer_b = Eer(b).value;
  out << "EER_A(%) " << FormatEerPercent(eer_a) << "\n";
  out << "EER_B(%) " << FormatEerPercent(eer_b) << "\n";
  if (eer_a == 0.0) {
    out << "relative_eer_reduction undefined\n";
    err << "note: system A has zero EER; relative reduction undefined\n";
  } else {
    out << "relative_eer_reduction "
        << FixedDecimal(RelativeEerReduction(eer_a, eer_b), 3) << "\n";
  }
  if (o.threshold) {
    const double t = *o.threshold;
    OperatingPoint pa = FarFrrAt(a, t), pb = FarFrrAt(b, t);
    out << "threshold " << ShortestDecimal(t) << "\n";
    out << "FAR_A " << FixedDecimal(pa.far, 6) << " FRR_A "
        << FixedDecimal(pa.frr, 6) << "\n";
    out << "FAR_B " << FixedDecimal(pb.far, 6) << " FRR_B "
        << FixedDecimal(pb.frr, 6) << "\n";
    std::vector<double> neg_a, neg_b;
    for (std::size_t i = 0; i < set.size(); ++i) {
      if (set[i].label != Label::kNontarget) continue;
      neg_a.push_back(a.scores[i]);
      neg_b.push_back(b.scores[i]);
    }
    try {
      out << "rFAR " << FixedDecimal(RelativeFarChange(neg_a, neg_b, t), 3)
          << "\n";
    } catch (const Error &e) {
      if (e.kind() != ErrorKind::kZeroFalseAcceptances) throw;
      out << "rFAR undefined\n";
      err << "note: " << e.what() << "\n";
    }
  }
  return kExitOk;
}

// --- simulate ---------------------------------------------------------------

struct SimulateOpts {
  std::string config_file, out_csv, out_plot;
  bool per_repeat = false;
  unsigned threads = 0;
  // flag name -> raw value, applied after the config file
  std::map<std::string, std::string> overrides;
};

int CmdSimulate(const SimulateOpts &o, std::ostream &out, std::ostream &err) {
  (void)out;
  SimConfig cfg;
  if (!o.config_file.empty()) {
    auto is = OpenInput(o.config_file);
    cfg = ParseSimConfig(is, cfg);
  }
  for (const auto &[k, v] : o.overrides) SetSimConfigValue(cfg, k, v);
  Validate(cfg);
  err << "trialkit simulate: mode=" << InjectionModeName(cfg.mode)
      << " batch=" << cfg.batch_size << " steps=" << cfg.steps
      << " repeats=" << cfg.repeats << " seed=" << cfg.seed << "\n";
  err << DescribeSimConfig(cfg);
  err << "out_csv=" << o.out_csv
      << " out_plot=" << (o.out_plot.empty() ? "none" : o.out_plot)
      << " per_repeat=" << (o.per_repeat ? 1 : 0) << "\n";
  if (!o.out_plot.empty() && cfg.steps < 1)
    throw Error(ErrorKind::kTooFewSteps, "--out-plot needs --steps >= 1");

  SimResult result = RunSimulation(cfg, o.threads);
  WriteStringToFile(o.out_csv, ExportSimCsv(result, o.per_repeat));
  if (!o.out_plot.empty())
    WriteStringToFile(o.out_plot, ExportSimPlotSvg(result));
  const SimAggregate &first = result.aggregate.front();
  const SimAggregate &last = result.aggregate.back();
  err << "step " << first.step << ": eer_sys1=" << ShortestDecimal(first.eer_sys1.mean)
      << " eer_sys2=" << ShortestDecimal(first.eer_sys2.mean)
      << " rel_reduction=" << ShortestDecimal(first.rel_reduction.mean) << "\n";
  err << "step " << last.step << ": eer_sys1=" << ShortestDecimal(last.eer_sys1.mean)
      << " eer_sys2=" << ShortestDecimal(last.eer_sys2.mean)
      << " rel_reduction=" << ShortestDecimal(last.rel_reduction.mean) << "\n";
  return kExitOk;
}

// --- mine -------------------------------------------------------------------

struct SvmOpts {
  double c = 1.0, tol = 1e-3;
  int max_passes = 10;
  std::int64_t max_iter = 50'000'000;
  std::optional<double> alpha_eps;
  bool standardize = false;
  std::uint64_t seed = 42;

  SvmParams Params() const {
    SvmParams p;
    p.c = c;
    p.tol = tol;
    p.max_passes_without_change = max_passes;
    p.max_iterations = max_iter;
    p.alpha_eps = alpha_eps;
    p.standardize = standardize;
    p.seed = seed;
    return p;
  }
};

struct MineOpts {
  std::string trials, out_hard, out_stats, out_model, set_name;
  std::string trial_format = "auto", out_format;
  std::vector<std::string> scores;
  SvmOpts svm;
};

int CmdMine(const MineOpts &o, std::ostream &out, std::ostream &err) {
  const SvmParams params = o.svm.Params();
  Validate(params);
  err << Echo("mine", {{"trials", o.trials},
                       {"scores", Join(o.scores)},
                       {"out_hard", o.out_hard},
                       {"out_stats", o.out_stats},
                       {"out_model", o.out_model.empty() ? "none" : o.out_model},
                       {"c", ShortestDecimal(params.c)},
                       {"tol", ShortestDecimal(params.tol)},
                       {"max_passes", std::to_string(params.max_passes_without_change)},
                       {"max_iter", std::to_string(params.max_iterations)},
                       {"alpha_eps", ShortestDecimal(params.AlphaEps())},
                       {"standardize", params.standardize ? "1" : "0"},
                       {"seed", std::to_string(params.seed)}});
  TrialFormat in_format = ParseFormatName(o.trial_format);
  if (in_format == TrialFormat::kAuto) in_format = DetectFileFormat(o.trials);
  TrialSet loaded = LoadTrials(o.trials, in_format);
  TrialSet set(loaded.trials(), o.set_name.empty() ? loaded.name() : o.set_name);
  ScoreTable table = Align(set, LoadScoreLists(o.scores));
  ReportExtras(table, err);
  err << "dimension=" << table.num_systems() << " trials=" << set.size()
      << "\n";

  MiningResult res = MineHardTrials(set, table, params);
  const SvmConvergence &cv = res.report.model.convergence;
  err << "svm: converged=" << (cv.converged ? 1 : 0)
      << " capped=" << (cv.capped ? 1 : 0) << " iterations=" << cv.iterations
      << " full_passes=" << cv.full_passes << " gap=" << ShortestDecimal(cv.gap)
      << " max_kkt_violation=" << ShortestDecimal(cv.max_kkt_violation)
      << " support_vectors=" << res.report.model.support_indices.size() << "\n";

  const TrialFormat out_format =
      o.out_format.empty() ? in_format : ParseFormatName(o.out_format);
  WriteStringToFile(o.out_hard, WriteTrials(res.hard, out_format));
  WriteStringToFile(o.out_stats, MiningStatsCsv(res.report));
  if (!o.out_model.empty())
    WriteStringToFile(o.out_model, WriteSvmModel(res.report.model));
  out << "dimension " << table.num_systems() << "\n";
  out << MiningStatsText(res.report);
  return kExitOk;
}

// --- report -----------------------------------------------------------------

struct ReportOpts {
  std::string trials, hard, trial_format = "auto";
  std::vector<std::string> scores;
  DcfOpts dcf;
};

int CmdReport(const ReportOpts &o, std::ostream &out, std::ostream &err) {
  err << Echo("report", {{"trials", o.trials},
                         {"hard", o.hard},
                         {"scores", Join(o.scores)},
                         {"p_target", ShortestDecimal(o.dcf.p_target)},
                         {"c_miss", ShortestDecimal(o.dcf.c_miss)},
                         {"c_fa", ShortestDecimal(o.dcf.c_fa)}});
  Validate(o.dcf.Params());
  const TrialFormat fmt = ParseFormatName(o.trial_format);
  TrialSet full = LoadTrials(o.trials, fmt);
  TrialSet hard = LoadTrials(o.hard, fmt);

  std::unordered_map<std::string, Label> full_labels;
  full_labels.reserve(full.size());
  for (const Trial &t : full.trials()) full_labels.emplace(TrialKey(t), t.label);
  for (const Trial &t : hard.trials()) {
    auto it = full_labels.find(TrialKey(t));
    if (it == full_labels.end())
      throw Error(ErrorKind::kUnknownTrial,
                  "hard trial " + TrialKey(t) + " is not in " + o.trials);
    if (it->second != t.label)
      throw Error(ErrorKind::kUnknownTrial,
                  "hard trial " + TrialKey(t) + " has a different label in " +
                      o.trials);
  }

  std::vector<ScoreList> lists = LoadScoreLists(o.scores);
  ScoreTable full_table = Align(full, lists);
  ScoreTable hard_table = Align(hard, lists);
  const std::string p = ShortestDecimal(o.dcf.p_target);

  out << "# full=" << full.size() << " trials, hard=" << hard.size()
      << " trials; minDCF (p-target = " << p << ")\n";
  out << "system\tEER_full(%)\tEER_hard(%)\tdelta_EER(%)\tminDCF_full\t"
         "minDCF_hard\tdelta_minDCF\n";
  for (Eigen::Index j = 0; j < full_table.num_systems(); ++j) {
    DetectionReport rf = Evaluate(
        MakeScoredTrials(full, SystemScores(full_table, j)), o.dcf.Params());
    DetectionReport rh = Evaluate(
        MakeScoredTrials(hard, SystemScores(hard_table, j)), o.dcf.Params());
    out << full_table.system_names[j] << '\t' << FormatEerPercent(rf.eer)
        << '\t' << FormatEerPercent(rh.eer) << '\t'
        << FormatEerPercent(rh.eer - rf.eer) << '\t'
        << FormatMinDcf(rf.min_dcf) << '\t' << FormatMinDcf(rh.min_dcf) << '\t'
        << FormatMinDcf(rh.min_dcf - rf.min_dcf) << '\n';
  }
  return kExitOk;
}

void AddDcfFlags(CLI::App *cmd, DcfOpts &o) {
  cmd->add_option("--p-target", o.p_target, "Target prior for minDCF")
      ->capture_default_str();
  cmd->add_option("--c-miss", o.c_miss, "Miss cost")->capture_default_str();
  cmd->add_option("--c-fa", o.c_fa, "False-alarm cost")->capture_default_str();
}

void AddTrialFormatFlag(CLI::App *cmd, std::string &fmt) {
  cmd->add_option("--trial-format", fmt, "Trial list format")
      ->check(CLI::IsMember({"auto", "kaldi", "voxceleb"}))
      ->capture_default_str();
}

}  // namespace

int RunCli(const std::vector<std::string> &args, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"trialkit: verification trial-set engineering toolkit",
               "trialkit"};
  app.require_subcommand(1);

  PairOpts pair;
  auto *pair_cmd = app.add_subcommand("pair", "Cross-pair utterances into a trial list");
  pair_cmd->add_option("--utt2spk", pair.utt2spk, "<utterance> <speaker> lines")
      ->required();
  pair_cmd->add_option("--out", pair.out, "Trial list to write")->required();
  pair_cmd->add_option("--format", pair.format, "Output format")
      ->check(CLI::IsMember({"kaldi", "voxceleb"}))
      ->capture_default_str();
  pair_cmd->add_flag("--symmetric-dedup", pair.symmetric_dedup,
                     "Keep each unordered pair once");
  pair_cmd->add_flag("--include-self-pairs", pair.include_self,
                     "Also emit (u, u) target trials");

  EvalOpts eval;
  auto *eval_cmd = app.add_subcommand("eval", "EER and minDCF of one system");
  eval_cmd->add_option("--trials", eval.trials)->required();
  eval_cmd->add_option("--scores", eval.scores)->required();
  eval_cmd->add_option("--out-curve", eval.out_curve,
                       "Write threshold,far,frr operating points");
  AddTrialFormatFlag(eval_cmd, eval.trial_format);
  AddDcfFlags(eval_cmd, eval.dcf);

  CompareOpts cmp;
  auto *cmp_cmd = app.add_subcommand("compare", "Compare two systems on one trial list");
  cmp_cmd->add_option("--trials", cmp.trials)->required();
  cmp_cmd->add_option("--scores-a", cmp.scores_a, "System I scores")->required();
  cmp_cmd->add_option("--scores-b", cmp.scores_b, "System II scores")->required();
  cmp_cmd->add_option("--threshold", cmp.threshold,
                      "Fixed threshold for FAR/FRR and rFAR");
  AddTrialFormatFlag(cmp_cmd, cmp.trial_format);

  SimulateOpts sim;
  auto *sim_cmd = app.add_subcommand("simulate", "Easy-trial injection study");
  sim_cmd->add_option("--config", sim.config_file, "key=value config file");
  sim_cmd->add_option("--out-csv", sim.out_csv)->required();
  sim_cmd->add_option("--out-plot", sim.out_plot, "SVG plot to write");
  sim_cmd->add_flag("--per-repeat", sim.per_repeat,
                    "Also write per-repeat rows to the CSV");
  sim_cmd->add_option("--threads", sim.threads, "Worker threads (0 = auto)");
  const std::vector<std::pair<std::string, std::string>> sim_flags = {
      {"--mode", "mode"},           {"--steps", "steps"},
      {"--batch", "batch_size"},    {"--repeats", "repeats"},
      {"--seed", "seed"},           {"--pos-mean", "pos_mean"},
      {"--pos-std", "pos_std"},     {"--pos-count", "pos_count"},
      {"--neg1-mean", "neg1_mean"}, {"--neg1-std", "neg1_std"},
      {"--neg1-count", "neg1_count"}, {"--neg2-mean", "neg2_mean"},
      {"--neg2-std", "neg2_std"},   {"--neg2-count", "neg2_count"},
      {"--easy-neg-mean", "easy_neg_mean"},
      {"--easy-neg-std", "easy_neg_std"},
      {"--easy-pos-mean", "easy_pos_mean"},
      {"--easy-pos-std", "easy_pos_std"}};
  std::map<std::string, std::string> sim_raw;
  for (const auto &[flag, key] : sim_flags)
    sim_cmd->add_option_function<std::string>(
        flag, [&sim_raw, key = key](const std::string &v) { sim_raw[key] = v; },
        "Overrides config key " + key);

  MineOpts mine;
  auto *mine_cmd = app.add_subcommand("mine", "Mine hard trials with a linear SVM");
  mine_cmd->add_option("--trials", mine.trials)->required();
  mine_cmd->add_option("--scores", mine.scores, "One score file per system")
      ->required()
      ->expected(1, -1);
  mine_cmd->add_option("--out-hard", mine.out_hard)->required();
  mine_cmd->add_option("--out-stats", mine.out_stats)->required();
  mine_cmd->add_option("--out-model", mine.out_model, "Trained SVM (JSON)");
  mine_cmd->add_option("--set-name", mine.set_name, "Name in the stats output");
  mine_cmd->add_option("--out-format", mine.out_format,
                       "Hard list format (default: input format)")
      ->check(CLI::IsMember({"kaldi", "voxceleb"}));
  AddTrialFormatFlag(mine_cmd, mine.trial_format);
  mine_cmd->add_option("--c", mine.svm.c)->capture_default_str();
  mine_cmd->add_option("--tol", mine.svm.tol)->capture_default_str();
  mine_cmd->add_option("--max-passes", mine.svm.max_passes)
      ->capture_default_str();
  mine_cmd->add_option("--max-iter", mine.svm.max_iter)->capture_default_str();
  mine_cmd->add_option("--alpha-eps", mine.svm.alpha_eps,
                       "Support threshold (default 1e-8 * c)");
  mine_cmd->add_flag("--standardize", mine.svm.standardize,
                     "Standardize score dimensions before training");
  mine_cmd->add_option("--seed", mine.svm.seed)->capture_default_str();

  ReportOpts rep;
  auto *rep_cmd = app.add_subcommand("report", "Full vs hard trial results");
  rep_cmd->add_option("--trials", rep.trials)->required();
  rep_cmd->add_option("--hard", rep.hard)->required();
  rep_cmd->add_option("--scores", rep.scores)->required()->expected(1, -1);
  AddTrialFormatFlag(rep_cmd, rep.trial_format);
  AddDcfFlags(rep_cmd, rep.dcf);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (pair_cmd->parsed()) return CmdPair(pair, out, err);
    if (eval_cmd->parsed()) return CmdEval(eval, out, err);
    if (cmp_cmd->parsed()) return CmdCompare(cmp, out, err);
    if (sim_cmd->parsed()) {
      sim.overrides = sim_raw;
      return CmdSimulate(sim, out, err);
    }
    if (mine_cmd->parsed()) return CmdMine(mine, out, err);
    if (rep_cmd->parsed()) return CmdReport(rep, out, err);
  } catch (const Error &e) {
    err << "error [" << ErrorKindName(e.kind()) << "]: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::kInvalidConfig: return kExitUsage;
      case ErrorKind::kDidNotConverge: return kExitConvergence;
      default: return kExitData;
    }
  }
  return kExitUsage;
}

}  // namespace trialkit
