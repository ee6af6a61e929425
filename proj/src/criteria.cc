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

#include "mwe/criteria.h"

#include <algorithm>
#include <bit>

#include "mwe/error.h"

namespace mwe {

namespace {

constexpr std::array<std::string_view, kNumCriteria> kRoman = {
    "i",  "ii",  "iii",  "iv", "v",  "vi",  "vii",  "viii",
    "ix", "x",   "xi",   "xii", "xiii", "xiv", "xv", "xvi"};

std::string JoinCodes(const std::vector<CriterionId> &ids) {
  std::string out;
  for (const auto &id : ids) {
    if (!out.empty()) out += ", ";
    out += id.Roman();
  }
  return out;
}

}  // namespace

std::string_view GroupName(Group g) {
  switch (g) {
    case Group::kLexical: return "lexical";
    case Group::kGrammatical: return "grammatical";
    case Group::kObsolescence: return "obsolescence";
    case Group::kReplacement: return "replacement";
  }
  return "?";
}

char GroupLetter(Group g) { return "LGOR"[GroupIndex(g)]; }

std::optional<Group> ParseGroup(std::string_view text) {
  for (Group g : kAllGroups) {
    std::string_view name = GroupName(g);
    if (text.size() == 1 && (text[0] == GroupLetter(g) ||
                             text[0] == GroupLetter(g) + ('a' - 'A'))) {
      return g;
    }
    if (text.size() != name.size()) continue;
    bool same = true;
    for (size_t i = 0; i < name.size(); ++i) {
      char c = text[i];
      if (i == 0 && c >= 'A' && c <= 'Z') c += 'a' - 'A';
      if (c != name[i]) same = false;
    }
    if (same) return g;
  }
  return std::nullopt;
}

std::optional<CriterionId> CriterionId::FromOrdinal(int ordinal) {
  if (ordinal < 1 || ordinal > kNumCriteria) return std::nullopt;
  return CriterionId(ordinal);
}

std::optional<CriterionId> CriterionId::Parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  for (int i = 0; i < kNumCriteria; ++i) {
    if (text == kRoman[i]) return CriterionId(i + 1);
  }
  if (text[0] == 'c') text.remove_prefix(1);
  if (text.empty() || text.size() > 2) return std::nullopt;
  int value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') return std::nullopt;
    value = value * 10 + (c - '0');
  }
  return FromOrdinal(value);
}

std::string CriterionId::Code() const {
  std::string code = "c";
  if (ordinal_ < 10) code += '0';
  code += std::to_string(ordinal_);
  return code;
}

std::string CriterionId::Roman() const {
  return std::string(kRoman[index()]);
}

CriterionSet::CriterionSet(std::initializer_list<CriterionId> ids) {
  for (auto id : ids) Insert(id);
}

CriterionSet CriterionSet::All() { return FromMask((1u << kNumCriteria) - 1); }

CriterionSet CriterionSet::FromMask(std::uint32_t mask) {
  CriterionSet set;
  set.bits_ = std::bitset<kNumCriteria>(mask & ((1u << kNumCriteria) - 1));
  return set;
}

std::vector<CriterionId> CriterionSet::ids() const {
  std::vector<CriterionId> out;
  for (int i = 0; i < kNumCriteria; ++i) {
    if (bits_.test(i)) out.push_back(Criterion(i + 1));
  }
  return out;
}

AnnotationVector AnnotationVector::FromCells(
    const std::array<int, kNumCriteria> &cells) {
  AnnotationVector v;
  for (int i = 0; i < kNumCriteria; ++i) v.cells_[i] = cells[i];
  return v;
}

AnnotationVector AnnotationVector::FromMask(std::uint32_t mask) {
  AnnotationVector v;
  for (int i = 0; i < kNumCriteria; ++i) v.cells_[i] = (mask >> i) & 1u;
  return v;
}

bool AnnotationVector::has_notes() const {
  return std::any_of(notes_.begin(), notes_.end(),
                     [](const std::string &n) { return !n.empty(); });
}

bool AnnotationVector::complete() const {
  return std::all_of(cells_.begin(), cells_.end(),
                     [](const Cell &c) { return c.has_value(); });
}

std::uint32_t AnnotationVector::mask() const {
  std::uint32_t m = 0;
  for (int i = 0; i < kNumCriteria; ++i) {
    if (cells_[i] == 1) m |= 1u << i;
  }
  return m;
}

std::string GroupVector::ToString() const {
  return "(" + std::to_string(sums[0]) + "," + std::to_string(sums[1]) + "," +
         std::to_string(sums[2]) + "," + std::to_string(sums[3]) + ")";
}

std::string_view RuleName(Rule rule) {
  switch (rule) {
    case Rule::kIncompleteVector: return "IncompleteVector";
    case Rule::kNonBinaryValue: return "NonBinaryValue";
    case Rule::kMutualExclusion: return "MutualExclusion";
    case Rule::kInapplicableSet: return "InapplicableSet";
    case Rule::kFeatureConflict: return "FeatureConflict";
  }
  return "?";
}

bool ValidationResult::Has(Rule rule) const {
  return std::any_of(violations.begin(), violations.end(),
                     [rule](const Violation &v) { return v.rule == rule; });
}

CriterionSet ApplicabilityMask(const LinguisticFeatures &features,
                               const CriteriaCatalog &catalog) {
  CriterionSet mask = CriterionSet::All();
  if (features.headless()) {
    for (auto id : catalog.headless_inapplicable().ids()) mask.Erase(id);
  }
  return mask;
}

ValidationResult ValidateAnnotation(const AnnotationVector &annotation,
                                    const LinguisticFeatures &features,
                                    const CriteriaCatalog &catalog) {
  ValidationResult result;
  auto &out = result.violations;

  std::vector<CriterionId> missing, non_binary;
  for (int i = 0; i < kNumCriteria; ++i) {
    const auto &cell = annotation.cells()[i];
    if (!cell) {
      missing.push_back(Criterion(i + 1));
    } else if (*cell != 0 && *cell != 1) {
      non_binary.push_back(Criterion(i + 1));
    }
  }
  if (!missing.empty()) {
    out.push_back({Rule::kIncompleteVector, missing,
                   "missing cells: " + JoinCodes(missing)});
  }
  if (!non_binary.empty()) {
    out.push_back({Rule::kNonBinaryValue, non_binary,
                   "cells must be 0 or 1: " + JoinCodes(non_binary)});
  }

  for (const auto &[a, b] : catalog.exclusion_pairs()) {
    if (annotation.is_set(a) && annotation.is_set(b)) {
      out.push_back({Rule::kMutualExclusion, {a, b},
                     "criteria " + a.Roman() + " and " + b.Roman() +
                         " are mutually exclusive"});
    }
  }

  if (features.headless()) {
    std::vector<CriterionId> offending;
    for (auto id : catalog.headless_inapplicable().ids()) {
      if (annotation.is_set(id)) offending.push_back(id);
    }
    if (!offending.empty()) {
      out.push_back({Rule::kInapplicableSet, offending,
                     "not applicable without a headword, must be 0: " +
                         JoinCodes(offending)});
    }
  }

  if (features.is_sentence && features.headword) {
    out.push_back({Rule::kFeatureConflict, {},
                   "a sentence-like expression has no headword"});
  }
  if (features.phrase_structure == "coordination" && features.headword) {
    out.push_back({Rule::kFeatureConflict, {},
                   "a coordinated expression has no headword"});
  }
  return result;
}

int TotalScore(const AnnotationVector &annotation) {
  return std::popcount(annotation.mask());
}

GroupVector ToGroupVector(const AnnotationVector &annotation,
                          const CriteriaCatalog &catalog) {
  GroupVector v;
  std::uint32_t mask = annotation.mask();
  for (Group g : kAllGroups) {
    v[g] = std::popcount(mask & catalog.members(g).mask());
  }
  return v;
}

}  // namespace mwe
