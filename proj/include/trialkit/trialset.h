// trialkit/trialset.h

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

#ifndef TRIALKIT_TRIALSET_H_
#define TRIALKIT_TRIALSET_H_

#include <cstddef>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace trialkit {

enum class Label { kTarget, kNontarget };

inline int LabelSign(Label l) { return l == Label::kTarget ? +1 : -1; }

/// One verification trial.  Ids are opaque tokens and are compared
/// byte-for-byte; no path normalization is applied anywhere.
struct Trial {
  std::string enroll_id;
  std::string test_id;
  Label label = Label::kNontarget;

  bool operator==(const Trial &) const = default;
};

/// Key used to look a trial up in score files: "<enroll> <test>".
/// Unambiguous because ids contain no whitespace.
std::string TrialKey(std::string_view enroll_id, std::string_view test_id);
inline std::string TrialKey(const Trial &t) {
  return TrialKey(t.enroll_id, t.test_id);
}

/// Ordered list of trials with no repeated (enroll, test) pair.  Immutable
/// after construction.
class TrialSet {
 public:
  TrialSet() = default;

  /// Validates ids and uniqueness; throws Error(kMalformedLine) on a bad id and
  /// Error(kDuplicateTrial) naming the 1-based position of the repeat.
  explicit TrialSet(std::vector<Trial> trials, std::string name = "");

  const std::vector<Trial> &trials() const { return trials_; }
  const std::string &name() const { return name_; }
  std::size_t size() const { return trials_.size(); }
  bool empty() const { return trials_.empty(); }
  const Trial &operator[](std::size_t i) const { return trials_[i]; }

  std::size_t CountTargets() const;
  std::size_t CountNontargets() const { return size() - CountTargets(); }

  bool operator==(const TrialSet &) const = default;

 private:
  std::vector<Trial> trials_;
  std::string name_;
};

/// (speaker, utterance) entries; utterance ids are unique.
class UtteranceCatalog {
 public:
  struct Entry {
    std::string speaker_id;
    std::string utterance_id;
  };

  UtteranceCatalog() = default;
  /// Throws Error(kDuplicateUtteranceId) on a repeated utterance id.
  explicit UtteranceCatalog(std::vector<Entry> entries);

  /// Reads `<utterance> <speaker>` lines (Kaldi utt2spk).
  static UtteranceCatalog FromUtt2Spk(std::istream &is);

  const std::vector<Entry> &entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<Entry> entries_;
};

struct CrossPairOptions {
  bool include_self_pairs = false;
  // Keep each unordered pair once, enroll position before test position.
  bool symmetric_dedup = false;
};

/// All utterance pairs from the catalog, labelled Target when both come from
/// the same speaker.  Enumeration order is enroll-major over catalog order.
/// A balanced catalog of N speakers with K utterances each gives
/// N*K*(K-1) targets and N*(N-1)*K*K nontargets by default.
TrialSet CrossPair(const UtteranceCatalog &catalog,
                   const CrossPairOptions &opts = {},
                   std::string name = "");

enum class TrialFormat { kKaldi, kVoxCeleb, kAuto };

/// Kaldi lines are `<enroll> <test> <target|nontarget>`, VoxCeleb lines are
/// `<1|0> <enroll> <test>`.  kAuto picks VoxCeleb when the first token of the
/// first non-empty line is "0" or "1".
TrialSet ParseTrials(std::istream &is, TrialFormat format = TrialFormat::kAuto,
                     std::string name = "");

/// The format ParseTrials would pick for this first data line.
TrialFormat DetectTrialFormat(std::string_view first_line);

std::string WriteTrials(const TrialSet &set, TrialFormat format);

/// Kept trials in their original order.  `keep` may be unsorted; each index
/// is kept at most once.  Throws Error(kIndexOutOfRange).
TrialSet Subset(const TrialSet &set, std::span<const std::size_t> keep);

}  // namespace trialkit

#endif  // TRIALKIT_TRIALSET_H_
