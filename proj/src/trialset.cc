// src/trialset.cc

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

#include "trialkit/trialset.h"

#include <algorithm>
#include <unordered_set>

#include "trialkit/error.h"
#include "trialkit/text-util.h"

namespace trialkit {

std::string TrialKey(std::string_view enroll_id, std::string_view test_id) {
  std::string key;
  key.reserve(enroll_id.size() + test_id.size() + 1);
  key.append(enroll_id);
  key.push_back(' ');
  key.append(test_id);
  return key;
}

TrialSet::TrialSet(std::vector<Trial> trials, std::string name)
    : trials_(std::move(trials)), name_(std::move(name)) {
  std::unordered_set<std::string> seen;
  seen.reserve(trials_.size());
  for (std::size_t i = 0; i < trials_.size(); ++i) {
    const Trial &t = trials_[i];
    if (!IsToken(t.enroll_id) || !IsToken(t.test_id))
      throw Error(ErrorKind::kMalformedLine,
                  "trial " + std::to_string(i + 1) +
                      ": ids must be non-empty and contain no whitespace",
                  i + 1);
    if (!seen.insert(TrialKey(t)).second)
      throw Error(ErrorKind::kDuplicateTrial,
                  "duplicate trial " + TrialKey(t) + " at position " +
                      std::to_string(i + 1),
                  i + 1);
  }
}

std::size_t TrialSet::CountTargets() const {
  return static_cast<std::size_t>(
      std::count_if(trials_.begin(), trials_.end(),
                    [](const Trial &t) { return t.label == Label::kTarget; }));
}

UtteranceCatalog::UtteranceCatalog(std::vector<Entry> entries)
    : entries_(std::move(entries)) {
  std::unordered_set<std::string> seen;
  seen.reserve(entries_.size());
  for (const Entry &e : entries_) {
    if (!IsToken(e.utterance_id) || !IsToken(e.speaker_id))
      throw Error(ErrorKind::kMalformedLine,
                  "catalog ids must be non-empty and contain no whitespace");
    if (!seen.insert(e.utterance_id).second)
      throw Error(ErrorKind::kDuplicateUtteranceId,
                  "duplicate utterance id " + e.utterance_id);
  }
}

UtteranceCatalog UtteranceCatalog::FromUtt2Spk(std::istream &is) {
  std::vector<Entry> entries;
  std::unordered_set<std::string> seen;
  ForEachDataLine(is, [&](std::size_t line_no,
                          const std::vector<std::string_view> &f) {
    if (f.size() != 2)
      throw Error(ErrorKind::kMalformedLine,
                  "utt2spk line " + std::to_string(line_no) +
                      ": expected '<utterance> <speaker>'",
                  line_no);
    if (!seen.insert(std::string(f[0])).second)
      throw Error(ErrorKind::kDuplicateUtteranceId,
                  "utt2spk line " + std::to_string(line_no) +
                      ": duplicate utterance id " + std::string(f[0]),
                  line_no);
    entries.push_back({std::string(f[1]), std::string(f[0])});
  });
  return UtteranceCatalog(std::move(entries));
}

TrialSet CrossPair(const UtteranceCatalog &catalog,
                   const CrossPairOptions &opts, std::string name) {
  if (catalog.empty())
    throw Error(ErrorKind::kEmptyCatalog, "utterance catalog is empty");
  const auto &e = catalog.entries();
  const std::size_t n = e.size();
  std::vector<Trial> trials;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j0 = opts.symmetric_dedup ? i : 0;
    for (std::size_t j = j0; j < n; ++j) {
      if (i == j && !opts.include_self_pairs) continue;
      trials.push_back({e[i].utterance_id, e[j].utterance_id,
                        e[i].speaker_id == e[j].speaker_id ? Label::kTarget
                                                           : Label::kNontarget});
    }
  }
  return TrialSet(std::move(trials), std::move(name));
}

TrialFormat DetectTrialFormat(std::string_view first_line) {
  auto f = SplitFields(first_line);
  if (!f.empty() && (f[0] == "0" || f[0] == "1")) return TrialFormat::kVoxCeleb;
  return TrialFormat::kKaldi;
}

TrialSet ParseTrials(std::istream &is, TrialFormat format, std::string name) {
  std::vector<Trial> trials;
  std::unordered_set<std::string> seen;
  ForEachDataLine(is, [&](std::size_t line_no,
                          const std::vector<std::string_view> &f) {
    const std::string where = "trials line " + std::to_string(line_no);
    if (f.size() != 3)
      throw Error(ErrorKind::kMalformedLine,
                  where + ": expected 3 fields, got " + std::to_string(f.size()),
                  line_no);
    if (format == TrialFormat::kAuto)
      format = (f[0] == "0" || f[0] == "1") ? TrialFormat::kVoxCeleb
                                            : TrialFormat::kKaldi;
    Trial t;
    std::string_view label;
    if (format == TrialFormat::kKaldi) {
      t.enroll_id = f[0];
      t.test_id = f[1];
      label = f[2];
      if (label == "target") {
        t.label = Label::kTarget;
      } else if (label == "nontarget") {
        t.label = Label::kNontarget;
      } else {
        throw Error(ErrorKind::kUnknownLabel,
                    where + ": unknown label '" + std::string(label) + "'",
                    line_no);
      }
    } else {
      label = f[0];
      t.enroll_id = f[1];
      t.test_id = f[2];
      if (label == "1") {
        t.label = Label::kTarget;
      } else if (label == "0") {
        t.label = Label::kNontarget;
      } else {
        throw Error(ErrorKind::kUnknownLabel,
                    where + ": unknown label '" + std::string(label) + "'",
                    line_no);
      }
    }
    if (!seen.insert(TrialKey(t)).second)
      throw Error(ErrorKind::kDuplicateTrial,
                  where + ": duplicate trial " + TrialKey(t), line_no);
    trials.push_back(std::move(t));
  });
  return TrialSet(std::move(trials), std::move(name));
}

std::string WriteTrials(const TrialSet &set, TrialFormat format) {
  std::string out;
  for (const Trial &t : set.trials()) {
    if (format == TrialFormat::kVoxCeleb) {
      out += (t.label == Label::kTarget) ? "1 " : "0 ";
      out += t.enroll_id;
      out += ' ';
      out += t.test_id;
    } else {
      out += t.enroll_id;
      out += ' ';
      out += t.test_id;
      out += (t.label == Label::kTarget) ? " target" : " nontarget";
    }
    out += '\n';
  }
  return out;
}

TrialSet Subset(const TrialSet &set, std::span<const std::size_t> keep) {
  std::vector<char> mask(set.size(), 0);
  for (std::size_t i : keep) {
    if (i >= set.size())
      throw Error(ErrorKind::kIndexOutOfRange,
                  "subset index " + std::to_string(i) + " out of range [0, " +
                      std::to_string(set.size()) + ")");
    mask[i] = 1;
  }
  std::vector<Trial> kept;
  for (std::size_t i = 0; i < set.size(); ++i)
    if (mask[i]) kept.push_back(set[i]);
  return TrialSet(std::move(kept), set.name());
}

}  // namespace trialkit
