// src/simlab.cc

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

#include "trialkit/simlab.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

#include "trialkit/error.h"
#include "trialkit/metrics.h"
#include "trialkit/text-util.h"

namespace trialkit {

std::string_view InjectionModeName(InjectionMode mode) {
  switch (mode) {
    case InjectionMode::kNegOnly: return "neg";
    case InjectionMode::kPosOnly: return "pos";
    case InjectionMode::kBoth: return "both";
  }
  return "?";
}

namespace {

void ValidateSpec(const GaussianSpec &s, std::string_view what) {
  if (!(s.std > 0.0) || !std::isfinite(s.std) || !std::isfinite(s.mean))
    throw Error(ErrorKind::kInvalidConfig,
                std::string(what) + ": need finite mean and std > 0");
}

InjectionMode ParseMode(std::string_view v) {
  if (v == "neg") return InjectionMode::kNegOnly;
  if (v == "pos") return InjectionMode::kPosOnly;
  if (v == "both") return InjectionMode::kBoth;
  throw Error(ErrorKind::kInvalidConfig,
              "mode must be neg, pos or both, got '" + std::string(v) + "'");
}

template <typename Int>
Int ParseInt(std::string_view key, std::string_view v) {
  Int out{};
  auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size())
    throw Error(ErrorKind::kInvalidConfig, std::string(key) +
                                               ": expected a non-negative "
                                               "integer, got '" +
                                               std::string(v) + "'");
  return out;
}

double ParseReal(std::string_view key, std::string_view v) {
  auto d = ParseDouble(v);
  if (!d || !std::isfinite(*d))
    throw Error(ErrorKind::kInvalidConfig, std::string(key) +
                                               ": expected a finite number, "
                                               "got '" + std::string(v) + "'");
  return *d;
}

MeanVariance Summarize(const std::vector<double> &xs) {
  double sum = 0.0;
  for (double x : xs) sum += x;
  const double mean = sum / static_cast<double>(xs.size());
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  return {mean, ss / static_cast<double>(xs.size())};
}

void MergeSortedBatch(std::vector<double> &pool, std::vector<double> batch) {
  std::sort(batch.begin(), batch.end());
  const auto mid = static_cast<std::ptrdiff_t>(pool.size());
  pool.insert(pool.end(), batch.begin(), batch.end());
  std::inplace_merge(pool.begin(), pool.begin() + mid, pool.end());
}

std::vector<SimRecord> RunRepeat(const SimConfig &cfg, std::size_t repeat) {
  SplitMix64 rng = Substream(cfg.seed, repeat);
  std::vector<double> pos = SampleGaussian(cfg.pos, rng);
  std::vector<double> neg1 = SampleGaussian(cfg.neg_sys1, rng);
  std::vector<double> neg2 = SampleGaussian(cfg.neg_sys2, rng);
  std::sort(pos.begin(), pos.end());
  std::sort(neg1.begin(), neg1.end());
  std::sort(neg2.begin(), neg2.end());

  const bool add_neg = cfg.mode != InjectionMode::kPosOnly;
  const bool add_pos = cfg.mode != InjectionMode::kNegOnly;
  GaussianSpec easy_neg = cfg.easy_neg, easy_pos = cfg.easy_pos;
  easy_neg.count = easy_pos.count = cfg.batch_size;

  std::vector<SimRecord> records;
  records.reserve(cfg.steps + 1);
  for (std::size_t step = 0; step <= cfg.steps; ++step) {
    if (step > 0) {
      if (add_neg) {
        std::vector<double> batch = SampleGaussian(easy_neg, rng);
        MergeSortedBatch(neg1, batch);
        MergeSortedBatch(neg2, std::move(batch));
      }
      if (add_pos) MergeSortedBatch(pos, SampleGaussian(easy_pos, rng));
    }
    SimRecord r;
    r.step = step;
    r.n_easy = EasyTrialsAdded(cfg, step);
    r.eer_sys1 = EerSorted(pos, neg1).value;
    r.eer_sys2 = EerSorted(pos, neg2).value;
    r.rel_reduction = RelativeEerReduction(r.eer_sys1, r.eer_sys2);
    records.push_back(r);
  }
  return records;
}

}  // namespace

void Validate(const SimConfig &cfg) {
  ValidateSpec(cfg.pos, "pos");
  ValidateSpec(cfg.neg_sys1, "neg1");
  ValidateSpec(cfg.neg_sys2, "neg2");
  ValidateSpec(cfg.easy_neg, "easy_neg");
  ValidateSpec(cfg.easy_pos, "easy_pos");
  if (cfg.batch_size < 1)
    throw Error(ErrorKind::kInvalidConfig, "batch_size must be >= 1");
  if (cfg.repeats < 1)
    throw Error(ErrorKind::kInvalidConfig, "repeats must be >= 1");
  if (cfg.pos.count < 1 || cfg.neg_sys1.count < 1 || cfg.neg_sys2.count < 1)
    throw Error(ErrorKind::kInvalidConfig,
                "base pools need at least one score each");
}

void SetSimConfigValue(SimConfig &cfg, std::string_view key,
                       std::string_view value) {
  struct PoolKey {
    std::string_view prefix;
    GaussianSpec *spec;
    bool has_count;
  };
  const PoolKey pools[] = {{"pos", &cfg.pos, true},
                           {"neg1", &cfg.neg_sys1, true},
                           {"neg2", &cfg.neg_sys2, true},
                           {"easy_neg", &cfg.easy_neg, false},
                           {"easy_pos", &cfg.easy_pos, false}};
  if (key == "mode") { cfg.mode = ParseMode(value); return; }
  if (key == "steps") { cfg.steps = ParseInt<std::size_t>(key, value); return; }
  if (key == "batch_size" || key == "batch") {
    cfg.batch_size = ParseInt<std::size_t>(key, value);
    return;
  }
  if (key == "repeats") {
    cfg.repeats = ParseInt<std::size_t>(key, value);
    return;
  }
  if (key == "seed") { cfg.seed = ParseInt<std::uint64_t>(key, value); return; }
  for (const PoolKey &p : pools) {
    if (key.size() <= p.prefix.size() + 1 || !key.starts_with(p.prefix) ||
        key[p.prefix.size()] != '_')
      continue;
    std::string_view field = key.substr(p.prefix.size() + 1);
    if (field == "mean") { p.spec->mean = ParseReal(key, value); return; }
    if (field == "std") { p.spec->std = ParseReal(key, value); return; }
    if (field == "count" && p.has_count) {
      p.spec->count = ParseInt<std::size_t>(key, value);
      return;
    }
  }
  throw Error(ErrorKind::kInvalidConfig,
              "unknown simulation key '" + std::string(key) + "'");
}

SimConfig ParseSimConfig(std::istream &is, SimConfig cfg) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    std::string_view v(line);
    if (auto hash = v.find('#'); hash != std::string_view::npos)
      v = v.substr(0, hash);
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                            s.back() == '\r'))
        s.remove_suffix(1);
      return s;
    };
    v = trim(v);
    if (v.empty()) continue;
    auto eq = v.find('=');
    if (eq == std::string_view::npos)
      throw Error(ErrorKind::kInvalidConfig,
                  "config line " + std::to_string(line_no) +
                      ": expected key=value",
                  line_no);
    SetSimConfigValue(cfg, trim(v.substr(0, eq)), trim(v.substr(eq + 1)));
  }
  return cfg;
}

std::string DescribeSimConfig(const SimConfig &cfg) {
  std::string out;
  auto kv = [&](std::string_view k, const std::string &v) {
    out.append(k);
    out += '=';
    out += v;
    out += '\n';
  };
  auto pool = [&](std::string_view prefix, const GaussianSpec &s,
                  bool with_count) {
    kv(std::string(prefix) + "_mean", ShortestDecimal(s.mean));
    kv(std::string(prefix) + "_std", ShortestDecimal(s.std));
    if (with_count) kv(std::string(prefix) + "_count", std::to_string(s.count));
  };
  kv("mode", std::string(InjectionModeName(cfg.mode)));
  kv("batch_size", std::to_string(cfg.batch_size));
  kv("steps", std::to_string(cfg.steps));
  kv("repeats", std::to_string(cfg.repeats));
  kv("seed", std::to_string(cfg.seed));
  pool("pos", cfg.pos, true);
  pool("neg1", cfg.neg_sys1, true);
  pool("neg2", cfg.neg_sys2, true);
  pool("easy_neg", cfg.easy_neg, false);
  pool("easy_pos", cfg.easy_pos, false);
  return out;
}

std::vector<double> SampleGaussian(const GaussianSpec &spec, SplitMix64 &rng) {
  std::vector<double> out;
  out.reserve(spec.count + 1);
  while (out.size() < spec.count) {
    const double u1 = rng.NextUnitOpenLow();
    const double u2 = rng.NextUnit();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    out.push_back(spec.mean + spec.std * r * std::cos(theta));
    out.push_back(spec.mean + spec.std * r * std::sin(theta));
  }
  out.resize(spec.count);
  return out;
}

std::size_t EasyTrialsAdded(const SimConfig &cfg, std::size_t step) {
  const std::size_t per_step =
      cfg.batch_size * (cfg.mode == InjectionMode::kBoth ? 2 : 1);
  return step * per_step;
}

SimResult RunSimulation(const SimConfig &cfg, unsigned threads) {
  Validate(cfg);
  SimResult result;
  result.config = cfg;
  result.per_repeat.resize(cfg.repeats);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, cfg.repeats));

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  auto worker = [&](unsigned w) {
    try {
      for (std::size_t r = next++; r < cfg.repeats; r = next++)
        result.per_repeat[r] = RunRepeat(cfg, r);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (threads <= 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto &t : pool) t.join();
  }
  for (auto &e : errors)
    if (e) std::rethrow_exception(e);

  // Reduction in repeat order, independent of which worker ran what.
  std::vector<double> e1(cfg.repeats), e2(cfg.repeats), rel(cfg.repeats);
  for (std::size_t step = 0; step <= cfg.steps; ++step) {
    for (std::size_t r = 0; r < cfg.repeats; ++r) {
      const SimRecord &rec = result.per_repeat[r][step];
      e1[r] = rec.eer_sys1;
      e2[r] = rec.eer_sys2;
      rel[r] = rec.rel_reduction;
    }
    SimAggregate a;
    a.step = step;
    a.n_easy = EasyTrialsAdded(cfg, step);
    a.eer_sys1 = Summarize(e1);
    a.eer_sys2 = Summarize(e2);
    a.rel_reduction = Summarize(rel);
    result.aggregate.push_back(a);
  }
  return result;
}

std::string ExportSimCsv(const SimResult &result, bool per_repeat_rows) {
  std::string out = "step,n_easy,metric,statistic,value\n";
  struct Metric {
    std::string_view name;
    MeanVariance SimAggregate::*agg;
    double SimRecord::*rec;
  };
  const Metric metrics[] = {
      {"eer_sys1", &SimAggregate::eer_sys1, &SimRecord::eer_sys1},
      {"eer_sys2", &SimAggregate::eer_sys2, &SimRecord::eer_sys2},
      {"rel_reduction", &SimAggregate::rel_reduction,
       &SimRecord::rel_reduction}};
  for (const SimAggregate &a : result.aggregate) {
    const std::string prefix =
        std::to_string(a.step) + ',' + std::to_string(a.n_easy) + ',';
    for (const Metric &m : metrics) {
      const MeanVariance &mv = a.*(m.agg);
      out += prefix;
      out.append(m.name);
      out += ",mean," + ShortestDecimal(mv.mean) + '\n';
      out += prefix;
      out.append(m.name);
      out += ",variance," + ShortestDecimal(mv.variance) + '\n';
      if (!per_repeat_rows) continue;
      for (std::size_t r = 0; r < result.per_repeat.size(); ++r) {
        out += prefix;
        out.append(m.name);
        out += ",repeat_" + std::to_string(r) + ',' +
               ShortestDecimal(result.per_repeat[r][a.step].*(m.rec)) + '\n';
      }
    }
  }
  return out;
}

}  // namespace trialkit
