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

#include <fstream>
#include <random>

#include "doctest.h"
#include "mwe/corpus.h"
#include "mwe/error.h"
#include "test_support.h"

namespace mwe {
namespace {

ErrorCode CodeOf(const std::function<void()> &f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::kIoError;
}

TEST_CASE("building an index from text") {
  std::vector<std::string> docs = {"Белый гриб растёт в лесу.", "",
                                   "Белые грибы! Белый   гриб."};
  CorpusIndex index = CorpusIndex::Build(docs, {});
  CHECK(index.document_count() == 3);
  CHECK(index.token_count() == 9);
  CHECK(index.document_begin(1) == index.document_end(1));
  CHECK(index.DocumentOf(5) == 2);
  CHECK(index.token(0) == "белый");
  CHECK(index.token(2) == "растет");
  CHECK(std::is_sorted(index.vocabulary().begin(), index.vocabulary().end()));
  auto postings = index.Postings("белый");
  CHECK(std::vector<std::uint32_t>(postings.begin(), postings.end()) ==
        std::vector<std::uint32_t>{0, 7});
  CHECK(index.Postings("нет").empty());
  auto [lo, hi] = index.PrefixRange("бел");
  CHECK(hi - lo == 2);
}

TEST_CASE("empty corpora are rejected") {
  CHECK(CodeOf([] { CorpusIndex::Build(std::vector<std::string>{}, {}); }) ==
        ErrorCode::kEmptyCorpus);
  CHECK(CodeOf([] { CorpusIndex::Build(std::vector<std::string>{" ,.! "}, {}); }) ==
        ErrorCode::kEmptyCorpus);
}

TEST_CASE("query parsing") {
  TokenizerConfig cfg;
  WildcardQuery q = ParseQuery("БЕЛЫЙ * гриб", cfg);
  REQUIRE(q.elements.size() == 3);
  CHECK(q.elements[0] == QueryElement{ElementKind::kLiteral, "белый"});
  CHECK(q.elements[1].kind == ElementKind::kAny);
  CHECK(q.elements[2] == QueryElement{ElementKind::kLiteral, "гриб"});
  CHECK(q.ToString() == "белый * гриб");

  WildcardQuery p = ParseQuery("бел* Гриб*", cfg);
  CHECK(p.elements[0] == QueryElement{ElementKind::kPrefix, "бел"});
  CHECK(p.elements[1] == QueryElement{ElementKind::kPrefix, "гриб"});
  CHECK(p.ToString() == "бел* гриб*");

  CHECK(CodeOf([&] { ParseQuery("   ", cfg); }) == ErrorCode::kEmptyQuery);
  CHECK(CodeOf([&] { ParseQuery("бе*лый", cfg); }) == ErrorCode::kMalformedElement);
  CHECK(CodeOf([&] { ParseQuery("**", cfg); }) == ErrorCode::kMalformedElement);
}

TEST_CASE("matches never span a document boundary") {
  CorpusIndex index = CorpusIndex::FromTokens({{"a", "b"}, {"c", "d"}}, {});
  CHECK(FindMatches(index, ParseQuery("b c", {})).empty());
  CHECK(FindMatches(index, ParseQuery("* *", {})).size() == 2);
  auto hits = FindMatches(index, ParseQuery("c *", {}));
  REQUIRE(hits.size() == 1);
  CHECK(hits[0] == Hit{1, 0, {"c", "d"}});
}

TEST_CASE("matcher agrees with a sliding-window scan") {
  std::mt19937 rng(2024);
  for (int corpus = 0; corpus < 100; ++corpus) {
    auto docs = testing::RandomCorpus(rng, 10000);
    CorpusIndex index = CorpusIndex::FromTokens(docs, {});
    for (int query = 0; query < 20; ++query) {
      WildcardQuery q = testing::RandomQuery(rng);
      INFO("corpus " << corpus << " query " << q.ToString());
      REQUIRE(FindMatches(index, q) == testing::NaiveMatches(docs, q));
    }
  }
}

TEST_CASE("index cache round-trips and refuses a different tokenizer") {
  testing::TempDir dir;
  std::vector<std::string> docs = {"Ёлка и ель.", "Белый гриб \xff растёт."};
  CorpusIndex index = CorpusIndex::Build(docs, {});
  index.SaveCache(dir.file("c.idx"));

  auto loaded = CorpusIndex::LoadCache(dir.file("c.idx"), {});
  REQUIRE(loaded);
  CHECK(loaded->token_count() == index.token_count());
  CHECK(loaded->document_count() == index.document_count());
  CHECK(loaded->invalid_bytes() == 1);
  CHECK(loaded->vocabulary() == index.vocabulary());
  auto q = ParseQuery("бел* *", {});
  CHECK(FindMatches(*loaded, q) == FindMatches(index, q));

  TokenizerConfig other;
  other.normalize_yo = false;
  CHECK_FALSE(CorpusIndex::LoadCache(dir.file("c.idx"), other));

  {
    std::ofstream out(dir.file("old.idx"));
    out << "mwe-corpus-index 0\n";
  }
  CHECK_FALSE(CorpusIndex::LoadCache(dir.file("old.idx"), {}));

  {
    std::ofstream out(dir.file("bad.idx"));
    out << "mwe-corpus-index 1\nconfig " << TokenizerConfig{}.Fingerprint()
        << "\ninvalid_bytes 0\ndocuments 3\nа б\n";
  }
  CHECK(CodeOf([&] { CorpusIndex::LoadCache(dir.file("bad.idx"), {}); }) ==
        ErrorCode::kParseError);
}

TEST_CASE("blank-line document splitting") {
  auto docs = SplitBlankLineDocuments("one\ntwo\n\n  \nthree\n\n");
  CHECK(docs == std::vector<std::string>{"one\ntwo", "three"});
  CHECK(SplitBlankLineDocuments("\n\n").empty());
}

}  // namespace
}  // namespace mwe
