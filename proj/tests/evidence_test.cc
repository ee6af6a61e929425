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

#include "doctest.h"
#include "mwe/dataset.h"
#include "mwe/error.h"
#include "mwe/evidence.h"

namespace mwe {
namespace {

// One document per sentence keeps phrases from running into each other.
CorpusIndex Corpus(std::vector<std::string> docs) {
  docs.push_back("лес шумит и ночь темна");
  return CorpusIndex::Build(docs, {});
}

std::vector<std::string> Repeat(const std::string &s, int n) {
  return std::vector<std::string>(n, s);
}

std::vector<std::string> Concat(std::vector<std::string> a,
                                const std::vector<std::string> &b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

const std::vector<std::string> kBelyiGrib = {"Белый", "гриб"};

TEST_CASE("effective hits zero out a single attestation") {
  CHECK(EffectiveHits(0) == 0);
  CHECK(EffectiveHits(1) == 0);
  CHECK(EffectiveHits(2) == 2);
  CHECK(EffectiveHits(17) == 17);
  CHECK(EffectiveHits(3, 3) == 0);
  for (int raw = 0; raw < 100; ++raw) {
    REQUIRE(EffectiveHits(raw) <= raw);
    REQUIRE(EffectiveHits(raw + 1) >= EffectiveHits(raw));
  }
}

TEST_CASE("one insertion is occasional use") {
  CorpusIndex index = Corpus(Concat(Repeat("белый гриб вырос", 3),
                                    {"белый большой гриб"}));
  EvidenceReport r = CheckInsertion(index, kBelyiGrib);
  CHECK(r.check == "insertion");
  REQUIRE(r.queries.size() == 2);
  CHECK(r.queries[0].query == "белый гриб");
  CHECK(r.queries[0].raw_hits == 3);
  CHECK(r.queries[1].query == "белый * гриб");
  CHECK(r.queries[1].raw_hits == 1);
  CHECK(r.queries[1].effective_hits == 0);
  REQUIRE(r.For(Criterion(5)));
  CHECK(r.For(Criterion(5))->suggestion == Suggestion::kSupports1);
}

TEST_CASE("two insertions count as evidence against criterion v") {
  CorpusIndex index = Corpus(Concat(Repeat("белый гриб вырос", 3),
                                    {"белый большой гриб", "белый старый гриб"}));
  EvidenceReport r = CheckInsertion(index, kBelyiGrib);
  CHECK(r.queries[1].raw_hits == 2);
  CHECK(r.queries[1].effective_hits == 2);
  CHECK(r.For(Criterion(5))->suggestion == Suggestion::kSupports0);
}

TEST_CASE("an unattested phrase is inconclusive even with insertions") {
  CorpusIndex index = Corpus(Repeat("белый большой гриб", 4));
  EvidenceReport r = CheckInsertion(index, kBelyiGrib);
  CHECK(r.queries[0].raw_hits == 0);
  CHECK(r.queries[1].effective_hits == 4);
  CHECK(r.For(Criterion(5))->suggestion == Suggestion::kInconclusive);
}

TEST_CASE("longer expressions get one gap query per adjacent pair") {
  CorpusIndex index = Corpus(Concat(Repeat("так и быть", 2), Repeat("так вот и быть", 2)));
  std::vector<std::string> tokens = {"так", "и", "быть"};
  EvidenceReport r = CheckInsertion(index, tokens);
  REQUIRE(r.queries.size() == 3);
  CHECK(r.queries[1].query == "так * и быть");
  CHECK(r.queries[2].query == "так и * быть");
  CHECK(r.queries[1].effective_hits == 2);
  CHECK(r.For(Criterion(5))->suggestion == Suggestion::kSupports0);
}

TEST_CASE("insertion check needs two tokens") {
  CorpusIndex index = Corpus({"гриб"});
  std::vector<std::string> one = {"гриб"};
  try {
    CheckInsertion(index, one);
    FAIL("accepted one token");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kTooShort);
  }
}

TEST_CASE("KWIC lines honour window and limit") {
  CorpusIndex index = Corpus(Repeat("один два три белый гриб четыре пять шесть", 5));
  EvidenceOptions options;
  options.kwic_window = 2;
  options.max_kwic_lines = 3;
  EvidenceReport r = CheckInsertion(index, kBelyiGrib, options);
  REQUIRE(r.queries[0].kwic.size() == 3);
  CHECK(r.queries[0].raw_hits == 5);
  const KwicLine &line = r.queries[0].kwic[0];
  CHECK(line.left == "два три");
  CHECK(line.match == "белый гриб");
  CHECK(line.right == "четыре пять");
}

MweRecord BelyiGrib() { return *SampleDataset().Find("belyi-grib"); }

TEST_CASE("inflection: several realizations") {
  CorpusIndex index = Corpus(Concat(Concat(Repeat("белый гриб", 3), Repeat("белого гриба", 2)),
                                    {"белые грибы"}));
  EvidenceReport r = CheckInflection(index, BelyiGrib());
  CHECK(r.queries[0].query == "бел* гриб*");
  REQUIRE(r.realizations.size() == 2);
  CHECK(r.realizations[0].surface == "белый гриб");
  CHECK(r.realizations[0].canonical);
  CHECK(r.realizations[1].surface == "белого гриба");
  REQUIRE(r.discarded.size() == 1);
  CHECK(r.discarded[0].surface == "белые грибы");
  CHECK(r.For(Criterion(6))->suggestion == Suggestion::kSupports0);
  CHECK(r.For(Criterion(7))->suggestion == Suggestion::kSupports0);
}

TEST_CASE("inflection: only the headword varies") {
  CorpusIndex index = Corpus(Concat(Repeat("белый гриб", 2), Repeat("белый грибочек", 2)));
  EvidenceReport r = CheckInflection(index, BelyiGrib());
  CHECK(r.For(Criterion(6))->suggestion == Suggestion::kSupports0);
  CHECK(r.For(Criterion(7))->suggestion == Suggestion::kSupports1);
}

TEST_CASE("inflection: a frozen form") {
  CorpusIndex index = Corpus(Concat(Repeat("белый гриб", 4), {"белая грибница"}));
  EvidenceReport r = CheckInflection(index, BelyiGrib());
  CHECK(r.realizations.size() == 1);
  CHECK(r.For(Criterion(6))->suggestion == Suggestion::kSupports1);
  CHECK(r.For(Criterion(7))->suggestion == Suggestion::kSupports0);
}

TEST_CASE("inflection: nothing beyond occasional use") {
  CorpusIndex index = Corpus({"белый гриб", "белого гриба"});
  EvidenceReport r = CheckInflection(index, BelyiGrib());
  CHECK(r.realizations.empty());
  CHECK(r.discarded.size() == 2);
  CHECK(r.For(Criterion(6))->suggestion == Suggestion::kInconclusive);
  CHECK(r.For(Criterion(7))->suggestion == Suggestion::kInconclusive);
}

TEST_CASE("inflection needs stems and a headword") {
  CorpusIndex index = Corpus(Repeat("белый гриб", 2));
  MweRecord r = BelyiGrib();
  r.token_stems.clear();
  try {
    CheckInflection(index, r);
    FAIL("accepted a record without stems");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kMissingStems);
  }

  MweRecord headless = BelyiGrib();
  headless.features.headword.reset();
  EvidenceReport report = CheckInflection(index, headless);
  const CriterionSuggestion *vii = report.For(Criterion(7));
  REQUIRE(vii);
  CHECK_FALSE(vii->suggestion);
  CHECK(vii->error == ErrorCode::kMissingHeadword);
  CHECK(report.For(Criterion(6))->suggestion == Suggestion::kSupports1);
}

}  // namespace
}  // namespace mwe
