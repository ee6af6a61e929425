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

#include "mwe/evidence.h"

#include <algorithm>
#include <map>

namespace mwe {

namespace {

std::string Join(std::span<const std::string> tokens) {
  std::string out;
  for (const auto &t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

std::string JoinRange(const CorpusIndex &index, std::uint32_t begin,
                      std::uint32_t end) {
  std::string out;
  for (std::uint32_t p = begin; p < end; ++p) {
    if (!out.empty()) out += ' ';
    out += index.token(p);
  }
  return out;
}

QueryEvidence RunQuery(const CorpusIndex &index, const WildcardQuery &query,
                       const EvidenceOptions &options,
                       std::vector<Hit> *hits_out = nullptr) {
  std::vector<Hit> hits = FindMatches(index, query);
  QueryEvidence ev;
  ev.query = query.ToString();
  ev.raw_hits = static_cast<int>(hits.size());
  ev.effective_hits = EffectiveHits(ev.raw_hits, options.occasional_max);

  const auto window = static_cast<std::uint32_t>(std::max(0, options.kwic_window));
  for (const auto &hit : hits) {
    if (static_cast<int>(ev.kwic.size()) >= options.max_kwic_lines) break;
    std::uint32_t doc_begin = index.document_begin(hit.document);
    std::uint32_t doc_end = index.document_end(hit.document);
    std::uint32_t start = doc_begin + hit.offset;
    std::uint32_t stop = start + static_cast<std::uint32_t>(hit.tokens.size());
    KwicLine line;
    line.document = hit.document;
    line.offset = hit.offset;
    line.left = JoinRange(index, start - std::min(window, start - doc_begin),
                          start);
    line.match = Join(hit.tokens);
    line.right = JoinRange(index, stop, std::min(doc_end, stop + window));
    ev.kwic.push_back(std::move(line));
  }
  if (hits_out) *hits_out = std::move(hits);
  return ev;
}

WildcardQuery LiteralQuery(std::span<const std::string> tokens) {
  WildcardQuery q;
  for (const auto &t : tokens) q.elements.push_back({ElementKind::kLiteral, t});
  return q;
}

}  // namespace

std::string_view SuggestionName(Suggestion s) {
  switch (s) {
    case Suggestion::kSupports1: return "supports_1";
    case Suggestion::kSupports0: return "supports_0";
    case Suggestion::kInconclusive: return "inconclusive";
  }
  return "?";
}

const CriterionSuggestion *EvidenceReport::For(CriterionId id) const {
  for (const auto &s : suggestions) {
    if (s.criterion == id) return &s;
  }
  return nullptr;
}

EvidenceReport CheckInsertion(const CorpusIndex &index,
                              std::span<const std::string> mwe_tokens,
                              const EvidenceOptions &options) {
  if (mwe_tokens.size() < 2) {
    throw Error(ErrorCode::kTooShort,
                "insertion check needs at least two tokens");
  }
  std::vector<std::string> tokens;
  for (const auto &t : mwe_tokens) {
    tokens.push_back(NormalizeToken(t, index.config()));
  }

  EvidenceReport report;
  report.check = "insertion";
  report.queries.push_back(RunQuery(index, LiteralQuery(tokens), options));
  bool insertion_attested = false;
  for (size_t gap = 0; gap + 1 < tokens.size(); ++gap) {
    WildcardQuery q = LiteralQuery(tokens);
    q.elements.insert(q.elements.begin() + gap + 1, {ElementKind::kAny, ""});
    report.queries.push_back(RunQuery(index, q, options));
    if (report.queries.back().effective_hits >= 1) insertion_attested = true;
  }

  CriterionSuggestion s;
  s.criterion = Criterion(5);
  if (report.queries.front().raw_hits == 0) {
    s.suggestion = Suggestion::kInconclusive;
    s.note = "phrase not found in the corpus";
  } else if (insertion_attested) {
    s.suggestion = Suggestion::kSupports0;
    s.note = "insertions attested";
  } else {
    s.suggestion = Suggestion::kSupports1;
    s.note = "no insertions beyond occasional use";
  }
  report.suggestions.push_back(std::move(s));
  return report;
}

EvidenceReport CheckInflection(const CorpusIndex &index,
                               const MweRecord &record,
                               const EvidenceOptions &options) {
  const auto &stems = record.token_stems;
  if (stems.empty() ||
      std::any_of(stems.begin(), stems.end(), [](const TokenStem &ts) {
        return ts.stem.empty() || ts.token.empty();
      })) {
    throw Error(ErrorCode::kMissingStems,
                "record '" + record.id + "' has no stems for its tokens");
  }
  const auto &config = index.config();
  std::vector<std::string> tokens;
  WildcardQuery query;
  for (const auto &ts : stems) {
    tokens.push_back(NormalizeToken(ts.token, config));
    query.elements.push_back(
        {ElementKind::kPrefix, NormalizeToken(ts.stem, config)});
  }
  const std::string canonical = Join(tokens);

  EvidenceReport report;
  report.check = "inflection";
  std::vector<Hit> hits;
  report.queries.push_back(RunQuery(index, query, options, &hits));

  std::map<std::string, std::pair<int, std::vector<std::string>>> by_surface;
  for (auto &hit : hits) {
    auto &entry = by_surface[Join(hit.tokens)];
    ++entry.first;
    if (entry.second.empty()) entry.second = std::move(hit.tokens);
  }
  std::vector<const std::vector<std::string> *> non_canonical;
  for (const auto &[surface, entry] : by_surface) {
    Realization r{surface, entry.first, surface == canonical};
    if (EffectiveHits(r.raw_count, options.occasional_max) == 0) {
      report.discarded.push_back(std::move(r));
    } else {
      if (!r.canonical) non_canonical.push_back(&entry.second);
      report.realizations.push_back(std::move(r));
    }
  }
  auto by_count = [](const Realization &a, const Realization &b) {
    return a.raw_count != b.raw_count ? a.raw_count > b.raw_count
                                      : a.surface < b.surface;
  };
  std::sort(report.realizations.begin(), report.realizations.end(), by_count);
  std::sort(report.discarded.begin(), report.discarded.end(), by_count);
  const size_t surviving = report.realizations.size();

  CriterionSuggestion vi;
  vi.criterion = Criterion(6);
  if (surviving == 0) {
    vi.suggestion = Suggestion::kInconclusive;
    vi.note = "no realization beyond occasional use";
  } else if (surviving == 1) {
    vi.suggestion = Suggestion::kSupports1;
    vi.note = "single realization";
  } else {
    vi.suggestion = Suggestion::kSupports0;
    vi.note = std::to_string(surviving) + " realizations";
  }
  report.suggestions.push_back(std::move(vi));

  CriterionSuggestion vii;
  vii.criterion = Criterion(7);
  std::optional<size_t> head_pos;
  if (record.features.headword) {
    std::string head = NormalizeToken(*record.features.headword, config);
    auto it = std::find(tokens.begin(), tokens.end(), head);
    if (it != tokens.end()) head_pos = it - tokens.begin();
  }
  if (!head_pos) {
    vii.error = ErrorCode::kMissingHeadword;
    vii.note = record.features.headword
                   ? "headword is not one of the record's tokens"
                   : "record has no headword";
  } else if (surviving == 0) {
    vii.suggestion = Suggestion::kInconclusive;
    vii.note = "no realization beyond occasional use";
  } else if (non_canonical.empty()) {
    // The form never changes, which is criterion vi rather than vii.
    vii.suggestion = Suggestion::kSupports0;
    vii.note = "no variant forms";
  } else {
    bool head_only = std::all_of(
        non_canonical.begin(), non_canonical.end(),
        [&](const std::vector<std::string> *variant) {
          for (size_t k = 0; k < tokens.size(); ++k) {
            if (k != *head_pos && (*variant)[k] != tokens[k]) return false;
          }
          return true;
        });
    vii.suggestion = head_only ? Suggestion::kSupports1 : Suggestion::kSupports0;
    vii.note = head_only ? "variation confined to the headword"
                         : "words other than the headword vary";
  }
  report.suggestions.push_back(std::move(vii));
  return report;
}

}  // namespace mwe
