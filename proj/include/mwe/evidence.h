// Copyright 2026 The MWE Workbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MWE_EVIDENCE_H_
#define MWE_EVIDENCE_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mwe/corpus.h"
#include "mwe/criteria.h"
#include "mwe/error.h"

namespace mwe {

enum class Suggestion { kSupports1, kSupports0, kInconclusive };

// "supports_1", "supports_0", "inconclusive".
std::string_view SuggestionName(Suggestion s);

struct EvidenceOptions {
  // A query or realization with at most this many hits is occasional use
  // and counts as zero evidence.
  int occasional_max = 1;
  int kwic_window = 5;
  int max_kwic_lines = 50;
};

inline int EffectiveHits(int raw_hits, int occasional_max = 1) {
  return raw_hits > occasional_max ? raw_hits : 0;
}

struct KwicLine {
  std::uint32_t document = 0;
  std::uint32_t offset = 0;
  std::string left;
  std::string match;
  std::string right;
};

struct QueryEvidence {
  std::string query;
  int raw_hits = 0;
  int effective_hits = 0;
  std::vector<KwicLine> kwic;
};

struct Realization {
  std::string surface;
  int raw_count = 0;
  bool canonical = false;
};

struct CriterionSuggestion {
  CriterionId criterion = Criterion(1);
  // Empty when the sub-check could not run; `error` says why.
  std::optional<Suggestion> suggestion;
  std::optional<ErrorCode> error;
  std::string note;
};

// Corpus evidence for one or more criteria. Suggestions are advisory and
// never change an annotation.
struct EvidenceReport {
  std::string check;  // "insertion" or "inflection"
  std::vector<QueryEvidence> queries;
  // Surviving realizations (inflection check only), most frequent first.
  std::vector<Realization> realizations;
  // Realizations dropped by the occasional-use rule.
  std::vector<Realization> discarded;
  std::vector<CriterionSuggestion> suggestions;

  const CriterionSuggestion *For(CriterionId id) const;
};

// Criterion v. Runs the contiguous phrase and, for every adjacent pair, the
// phrase with one wildcard token inserted into that gap. Throws
// Error(kTooShort) for fewer than two tokens.
EvidenceReport CheckInsertion(const CorpusIndex &index,
                              std::span<const std::string> mwe_tokens,
                              const EvidenceOptions &options = {});

// Criteria vi and vii. Runs the all-prefix query built from the record's
// stems and groups hits by surface realization. Throws
// Error(kMissingStems); a missing headword only disables the vii sub-check.
EvidenceReport CheckInflection(const CorpusIndex &index,
                               const MweRecord &record,
                               const EvidenceOptions &options = {});

}  // namespace mwe

#endif  // MWE_EVIDENCE_H_
