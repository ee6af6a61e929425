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

#ifndef MWE_CRITERIA_H_
#define MWE_CRITERIA_H_

#include <array>
#include <bitset>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mwe {

inline constexpr int kNumCriteria = 16;
inline constexpr int kNumGroups = 4;

// The four criterion groups. The numeric value doubles as the axis index in
// group vectors.
enum class Group { kLexical = 0, kGrammatical = 1, kObsolescence = 2,
                   kReplacement = 3 };

inline constexpr std::array<Group, kNumGroups> kAllGroups = {
    Group::kLexical, Group::kGrammatical, Group::kObsolescence,
    Group::kReplacement};

inline constexpr int GroupIndex(Group g) { return static_cast<int>(g); }

// "lexical", "grammatical", "obsolescence", "replacement".
std::string_view GroupName(Group g);

// Single-letter axis name: L, G, O, R.
char GroupLetter(Group g);

// Accepts the letter, the lower-case name, or the capitalized name.
std::optional<Group> ParseGroup(std::string_view text);

// One of the 16 criteria, identified by its ordinal 1..16.
class CriterionId {
 public:
  static std::optional<CriterionId> FromOrdinal(int ordinal);

  // Accepts "c05", "5" or the roman numeral "v".
  static std::optional<CriterionId> Parse(std::string_view text);

  constexpr int ordinal() const { return ordinal_; }
  constexpr int index() const { return ordinal_ - 1; }

  // Stable short code, "c01".."c16".
  std::string Code() const;
  std::string Roman() const;

  friend constexpr auto operator<=>(CriterionId, CriterionId) = default;

 private:
  constexpr explicit CriterionId(int ordinal) : ordinal_(ordinal) {}
  friend constexpr CriterionId Criterion(int ordinal);

  int ordinal_;
};

// Unchecked constructor for compile-time constants; ordinal must be 1..16.
constexpr CriterionId Criterion(int ordinal) { return CriterionId(ordinal); }

// Set of criteria backed by a 16-bit mask.
class CriterionSet {
 public:
  CriterionSet() = default;
  CriterionSet(std::initializer_list<CriterionId> ids);

  static CriterionSet All();
  static CriterionSet FromMask(std::uint32_t mask);

  void Insert(CriterionId id) { bits_.set(id.index()); }
  void Erase(CriterionId id) { bits_.reset(id.index()); }
  bool Contains(CriterionId id) const { return bits_.test(id.index()); }
  int size() const { return static_cast<int>(bits_.count()); }
  bool empty() const { return bits_.none(); }
  std::uint32_t mask() const {
    return static_cast<std::uint32_t>(bits_.to_ulong());
  }

  // Members in ascending ordinal order.
  std::vector<CriterionId> ids() const;

  friend bool operator==(const CriterionSet &, const CriterionSet &) = default;

 private:
  std::bitset<kNumCriteria> bits_;
};

struct CriterionInfo {
  CriterionId id = Criterion(1);
  std::string code;
  Group group = Group::kLexical;
  std::string name;
  bool inapplicable_when_headless = false;
};

// Registry of the criteria, their group membership and the constraints
// between them. The default catalog reproduces the reference layout; other
// groupings can be loaded from a catalog file.
//
// Catalog file format, one directive per line, '#' starts a comment:
//
//   version <tag>
//   criterion <ordinal> <code> <group> <headless-na 0|1> <display name...>
//   exclusive <ordinal> <ordinal>
class CriteriaCatalog {
 public:
  static const CriteriaCatalog &Default();

  // Throws Error(kInvalidCatalog) on malformed or incomplete input.
  static CriteriaCatalog Parse(std::string_view text);
  static CriteriaCatalog LoadFile(const std::string &path);

  // Canonical catalog file text; Parse(Serialize()) reproduces the catalog.
  std::string Serialize() const;

  const std::string &version() const { return version_; }
  const std::vector<CriterionInfo> &entries() const { return entries_; }
  const CriterionInfo &info(CriterionId id) const {
    return entries_[id.index()];
  }
  Group group_of(CriterionId id) const { return info(id).group; }
  const std::vector<std::pair<CriterionId, CriterionId>> &exclusion_pairs()
      const {
    return exclusion_pairs_;
  }

  CriterionSet members(Group g) const { return members_[GroupIndex(g)]; }
  CriterionSet headless_inapplicable() const { return headless_na_; }
  int group_size(Group g) const { return members(g).size(); }

  // Largest sum a valid annotation can reach inside the group, taking the
  // exclusion pairs into account (2 for the default grammatical group).
  int group_max(Group g) const { return group_max_[GroupIndex(g)]; }

  // Largest total score of any valid annotation.
  int max_total() const { return max_total_; }

  friend bool operator==(const CriteriaCatalog &a, const CriteriaCatalog &b) {
    return a.Serialize() == b.Serialize();
  }

 private:
  CriteriaCatalog(std::string version, std::vector<CriterionInfo> entries,
                  std::vector<std::pair<CriterionId, CriterionId>> exclusions);

  std::string version_;
  std::vector<CriterionInfo> entries_;
  std::vector<std::pair<CriterionId, CriterionId>> exclusion_pairs_;
  std::array<CriterionSet, kNumGroups> members_;
  CriterionSet headless_na_;
  std::array<int, kNumGroups> group_max_{};
  int max_total_ = 0;
};

// Recommended (open) vocabulary for LinguisticFeatures::phrase_structure.
inline constexpr std::array<std::string_view, 6> kPhraseStructures = {
    "agreement", "government", "adjoinment", "coordination", "sentence",
    "other"};

struct LinguisticFeatures {
  std::string pos_pattern;
  bool is_sentence = false;
  std::optional<std::string> headword;
  std::string phrase_structure;

  // Sentence-like and coordinated expressions have no headword.
  bool headless() const {
    return is_sentence || phrase_structure == "coordination";
  }

  friend bool operator==(const LinguisticFeatures &,
                         const LinguisticFeatures &) = default;
};

// The 16 annotation cells of one expression. Cells may be missing or hold
// values other than 0/1 while a record is still a draft; validation reports
// both.
class AnnotationVector {
 public:
  using Cell = std::optional<int>;

  AnnotationVector() = default;

  // Complete vector from 16 values in ordinal order.
  static AnnotationVector FromCells(const std::array<int, kNumCriteria> &cells);

  // Complete binary vector; bit i holds criterion i + 1.
  static AnnotationVector FromMask(std::uint32_t mask);

  const Cell &cell(CriterionId id) const { return cells_[id.index()]; }
  void set_cell(CriterionId id, Cell value) { cells_[id.index()] = value; }
  bool is_set(CriterionId id) const { return cell(id) == 1; }

  const std::string &note(CriterionId id) const { return notes_[id.index()]; }
  void set_note(CriterionId id, std::string note) {
    notes_[id.index()] = std::move(note);
  }
  bool has_notes() const;

  // Every cell present.
  bool complete() const;

  // Bit i set iff criterion i + 1 holds the value 1.
  std::uint32_t mask() const;

  const std::array<Cell, kNumCriteria> &cells() const { return cells_; }

  friend bool operator==(const AnnotationVector &,
                         const AnnotationVector &) = default;

 private:
  std::array<Cell, kNumCriteria> cells_;
  std::array<std::string, kNumCriteria> notes_;
};

struct TokenStem {
  std::string token;
  std::string stem;

  friend bool operator==(const TokenStem &, const TokenStem &) = default;
};

struct MweRecord {
  std::string id;
  std::string surface;
  std::optional<std::string> gloss;
  std::optional<std::string> source;
  // Free-text record notes, including provenance.
  std::string notes;
  LinguisticFeatures features;
  AnnotationVector annotation;
  std::vector<TokenStem> token_stems;

  friend bool operator==(const MweRecord &, const MweRecord &) = default;
};

struct GroupVector {
  std::array<int, kNumGroups> sums{};

  int operator[](Group g) const { return sums[GroupIndex(g)]; }
  int &operator[](Group g) { return sums[GroupIndex(g)]; }
  int total() const { return sums[0] + sums[1] + sums[2] + sums[3]; }

  // "(5,0,0,4)"
  std::string ToString() const;

  friend auto operator<=>(const GroupVector &, const GroupVector &) = default;
};

enum class Rule {
  kIncompleteVector,
  kNonBinaryValue,
  kMutualExclusion,
  kInapplicableSet,
  kFeatureConflict,
};

// "IncompleteVector", "MutualExclusion", ...
std::string_view RuleName(Rule rule);

struct Violation {
  Rule rule;
  std::vector<CriterionId> criteria;
  std::string message;

  friend bool operator==(const Violation &, const Violation &) = default;
};

struct ValidationResult {
  // Sorted by rule, then by the offending criteria.
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  bool Has(Rule rule) const;
};

// Criteria that apply to an expression with the given features: all of them,
// minus the headless-inapplicable ones when the expression has no headword.
CriterionSet ApplicabilityMask(const LinguisticFeatures &features,
                               const CriteriaCatalog &catalog);

ValidationResult ValidateAnnotation(const AnnotationVector &annotation,
                                    const LinguisticFeatures &features,
                                    const CriteriaCatalog &catalog);

inline ValidationResult ValidateRecord(const MweRecord &record,
                                       const CriteriaCatalog &catalog) {
  return ValidateAnnotation(record.annotation, record.features, catalog);
}

// Number of cells equal to 1.
int TotalScore(const AnnotationVector &annotation);

// Per-group sums of the cells equal to 1.
GroupVector ToGroupVector(const AnnotationVector &annotation,
                          const CriteriaCatalog &catalog);

}  // namespace mwe

#endif  // MWE_CRITERIA_H_
