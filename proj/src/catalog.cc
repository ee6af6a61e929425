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

#include <algorithm>
#include <bit>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "mwe/criteria.h"
#include "mwe/error.h"

namespace mwe {

namespace {

constexpr std::string_view kDefaultCatalogText = R"(# Default criteria catalog.
version default-16
criterion 1 c01 lexical 0 Lexemes (partially) lose independent meaning
criterion 2 c02 lexical 0 Subordinate words cannot be replaced with a synonym
criterion 3 c03 lexical 1 Headword cannot be replaced with a synonym
criterion 4 c04 lexical 0 Cannot be translated word by word
criterion 5 c05 lexical 0 Does not allow insertions of lexemes
criterion 6 c06 grammatical 0 Never changes grammatical form
criterion 7 c07 grammatical 1 Only headword changes grammatical form
criterion 8 c08 grammatical 0 Word order seldom or never changes
criterion 9 c09 obsolescence 0 Contains lexical archaisms
criterion 10 c10 obsolescence 0 Contains unique lexemes
criterion 11 c11 obsolescence 0 Archaic syntax and/or morphology
criterion 12 c12 replacement 0 Allows ellipsis
criterion 13 c13 replacement 0 Allows portmanteau words
criterion 14 c14 replacement 1 Can be replaced with headword
criterion 15 c15 replacement 0 Can be replaced with one word
criterion 16 c16 replacement 0 Can be translated with one word
exclusive 6 7
)";

[[noreturn]] void Fail(int line, const std::string &message) {
  std::string where = line > 0 ? "line " + std::to_string(line) + ": " : "";
  throw Error(ErrorCode::kInvalidCatalog, "catalog " + where + message);
}

int ParseOrdinal(const std::string &text, int line) {
  auto id = CriterionId::Parse(text);
  if (!id) Fail(line, "bad criterion ordinal '" + text + "'");
  return id->ordinal();
}

// Maximum number of set bits over subsets of `members` that contain no
// exclusion pair. Groups are small, so plain enumeration is fine.
int MaxIndependent(std::uint32_t members,
                   const std::vector<std::pair<CriterionId, CriterionId>>
                       &pairs) {
  int best = 0;
  // Enumerate all submasks of `members`, including the empty one.
  for (std::uint32_t sub = members;; sub = (sub - 1) & members) {
    bool ok = true;
    for (const auto &[a, b] : pairs) {
      if ((sub >> a.index() & 1u) && (sub >> b.index() & 1u)) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, std::popcount(sub));
    if (sub == 0) break;
  }
  return best;
}

}  // namespace

const CriteriaCatalog &CriteriaCatalog::Default() {
  static const CriteriaCatalog *catalog =
      new CriteriaCatalog(Parse(kDefaultCatalogText));
  return *catalog;
}

CriteriaCatalog::CriteriaCatalog(
    std::string version, std::vector<CriterionInfo> entries,
    std::vector<std::pair<CriterionId, CriterionId>> exclusions)
    : version_(std::move(version)),
      entries_(std::move(entries)),
      exclusion_pairs_(std::move(exclusions)) {
  for (const auto &entry : entries_) {
    members_[GroupIndex(entry.group)].Insert(entry.id);
    if (entry.inapplicable_when_headless) headless_na_.Insert(entry.id);
  }
  for (Group g : kAllGroups) {
    group_max_[GroupIndex(g)] =
        MaxIndependent(members_[GroupIndex(g)].mask(), exclusion_pairs_);
  }
  max_total_ = MaxIndependent(CriterionSet::All().mask(), exclusion_pairs_);
}

CriteriaCatalog CriteriaCatalog::Parse(std::string_view text) {
  std::string version;
  std::vector<std::optional<CriterionInfo>> slots(kNumCriteria);
  std::set<std::pair<CriterionId, CriterionId>> exclusions;
  std::set<std::string> codes;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream line(raw);
    std::string keyword;
    if (!(line >> keyword)) continue;

    if (keyword == "version") {
      if (!(line >> version)) Fail(line_no, "missing version tag");
    } else if (keyword == "criterion") {
      std::string ordinal, code, group, flag;
      if (!(line >> ordinal >> code >> group >> flag)) {
        Fail(line_no, "criterion needs ordinal, code, group, flag and name");
      }
      CriterionInfo info;
      info.id = Criterion(ParseOrdinal(ordinal, line_no));
      info.code = code;
      auto g = ParseGroup(group);
      if (!g) Fail(line_no, "unknown group '" + group + "'");
      info.group = *g;
      if (flag != "0" && flag != "1") {
        Fail(line_no, "headless flag must be 0 or 1");
      }
      info.inapplicable_when_headless = flag == "1";
      std::getline(line >> std::ws, info.name);
      while (!info.name.empty() && std::isspace(
                 static_cast<unsigned char>(info.name.back()))) {
        info.name.pop_back();
      }
      if (info.name.empty()) Fail(line_no, "criterion without display name");
      if (slots[info.id.index()]) {
        Fail(line_no, "duplicate criterion " + ordinal);
      }
      if (!codes.insert(code).second) {
        Fail(line_no, "duplicate code '" + code + "'");
      }
      slots[info.id.index()] = std::move(info);
    } else if (keyword == "exclusive") {
      std::string a, b, extra;
      if (!(line >> a >> b) || (line >> extra)) {
        Fail(line_no, "exclusive needs exactly two ordinals");
      }
      int x = ParseOrdinal(a, line_no);
      int y = ParseOrdinal(b, line_no);
      if (x == y) Fail(line_no, "a criterion cannot exclude itself");
      exclusions.insert({Criterion(std::min(x, y)), Criterion(std::max(x, y))});
    } else {
      Fail(line_no, "unknown directive '" + keyword + "'");
    }
  }

  if (version.empty()) Fail(0, "missing version directive");
  std::vector<CriterionInfo> entries;
  for (int i = 0; i < kNumCriteria; ++i) {
    if (!slots[i]) {
      Fail(0, "criterion " + std::to_string(i + 1) + " is not defined");
    }
    entries.push_back(std::move(*slots[i]));
  }
  return CriteriaCatalog(std::move(version), std::move(entries),
                         {exclusions.begin(), exclusions.end()});
}

CriteriaCatalog CriteriaCatalog::LoadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read catalog " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return Parse(text.str());
}

std::string CriteriaCatalog::Serialize() const {
  std::ostringstream out;
  out << "version " << version_ << "\n";
  for (const auto &entry : entries_) {
    out << "criterion " << entry.id.ordinal() << " " << entry.code << " "
        << GroupName(entry.group) << " "
        << (entry.inapplicable_when_headless ? 1 : 0) << " " << entry.name
        << "\n";
  }
  for (const auto &[a, b] : exclusion_pairs_) {
    out << "exclusive " << a.ordinal() << " " << b.ordinal() << "\n";
  }
  return out.str();
}

}  // namespace mwe
