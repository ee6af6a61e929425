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

#include <random>

#include "doctest.h"
#include "mwe/dataset.h"
#include "mwe/error.h"
#include "test_support.h"

namespace mwe {
namespace {

const CriteriaCatalog &Cat() { return CriteriaCatalog::Default(); }

std::string Header() { return SaveDataset(Dataset(), DatasetFormat::kTabular); }

std::string Row(const std::string &id, const std::string &cells,
                const std::string &is_sentence = "0",
                const std::string &headword = "гриб",
                const std::string &structure = "agreement") {
  std::string row = id + "\tsurface\t\t\tA+N\t" + is_sentence + "\t" + headword +
                    "\t" + structure;
  for (char c : cells) {
    row += '\t';
    if (c != '_') row += c;
  }
  return row + "\t\n";
}

TEST_CASE("the bundled sample is stored in canonical form") {
  CHECK(SampleDataset().records.size() == 6);
  CHECK(SaveDataset(SampleDataset(), DatasetFormat::kStructured) ==
        SampleDatasetJson());
}

TEST_CASE("sample round-trips in both formats") {
  for (DatasetFormat f : {DatasetFormat::kStructured, DatasetFormat::kTabular}) {
    INFO(FormatName(f));
    std::string first = SaveDataset(SampleDataset(), f);
    LoadResult loaded = LoadDataset(first, f, Cat());
    REQUIRE(loaded.ok());
    CHECK(SaveDataset(loaded.dataset, f) == first);
    if (f == DatasetFormat::kStructured) CHECK(loaded.dataset == SampleDataset());
  }
}

TEST_CASE("random datasets round-trip byte for byte") {
  std::mt19937 rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    // The tabular format carries no cell notes or stems.
    const bool structured = trial % 2 == 0;
    const DatasetFormat f = structured ? DatasetFormat::kStructured : DatasetFormat::kTabular;
    Dataset d = testing::RandomValidDataset(rng, static_cast<int>(rng() % 120), structured);
    std::shuffle(d.records.begin(), d.records.end(), rng);
    std::string first = SaveDataset(d, f);
    LoadResult loaded = LoadDataset(first, f, Cat());
    REQUIRE(loaded.ok());
    std::sort(d.records.begin(), d.records.end(),
              [](const MweRecord &a, const MweRecord &b) { return a.id < b.id; });
    REQUIRE(loaded.dataset == d);
    REQUIRE(SaveDataset(loaded.dataset, f) == first);
  }
}

TEST_CASE("draft cells survive a structured round-trip") {
  Dataset d = SampleDataset();
  d.records[0].annotation.set_cell(Criterion(4), std::nullopt);
  std::string text = SaveDataset(d, DatasetFormat::kStructured);
  CHECK_FALSE(LoadDataset(text, DatasetFormat::kStructured, Cat()).ok());
  LoadResult drafts = LoadDataset(text, DatasetFormat::kStructured, Cat(), {true});
  REQUIRE(drafts.ok());
  CHECK(drafts.dataset == d);
  CHECK(SaveDataset(drafts.dataset, DatasetFormat::kStructured) == text);
}

TEST_CASE("tabular errors carry line numbers") {
  std::string text = Header() + Row("a", "1111100000000000") +
                     Row("b", "1111111000000000") +        // vi and vii
                     Row("c", "111110000000000x") +        // not binary
                     Row("d", "1101100000000000", "1", "быть", "sentence") +
                     Row("a", "0000000000000000");         // duplicate
  LoadResult r = LoadDataset(text, DatasetFormat::kTabular, Cat());
  CHECK_FALSE(r.ok());
  CHECK(r.dataset.records.empty());
  REQUIRE(r.errors.size() == 4);
  CHECK(r.errors[0].kind == LoadErrorKind::kParseError);
  CHECK(r.errors[0].line == 4);
  CHECK(r.errors[0].record_id == "c");
  bool saw_exclusion = false, saw_conflict = false, saw_duplicate = false;
  for (const auto &e : r.errors) {
    if (e.rule == Rule::kMutualExclusion) {
      saw_exclusion = true;
      CHECK(e.line == 3);
      CHECK(e.record_id == "b");
      CHECK(e.ToString().find("line 3") != std::string::npos);
    }
    if (e.rule == Rule::kFeatureConflict) saw_conflict = e.line == 5;
    if (e.kind == LoadErrorKind::kDuplicateId) saw_duplicate = e.line == 6;
  }
  CHECK(saw_exclusion);
  CHECK(saw_conflict);
  CHECK(saw_duplicate);
}

TEST_CASE("tabular header problems") {
  CHECK_FALSE(LoadDataset("", DatasetFormat::kTabular, Cat()).ok());
  CHECK_FALSE(LoadDataset("id\tsurface\n", DatasetFormat::kTabular, Cat()).ok());
  std::string header = Header();
  header.insert(header.size() - 1, "\textra");
  CHECK_FALSE(LoadDataset(header, DatasetFormat::kTabular, Cat()).ok());
  LoadResult short_row = LoadDataset(Header() + "a\tb\n", DatasetFormat::kTabular, Cat());
  REQUIRE(short_row.errors.size() == 1);
  CHECK(short_row.errors[0].line == 2);
}

TEST_CASE("tabular columns can come in any order") {
  std::string text = SaveDataset(SampleDataset(), DatasetFormat::kTabular);
  // Swap the first two columns in every line.
  std::string swapped;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    std::string line = text.substr(pos, end - pos);
    size_t t1 = line.find('\t');
    size_t t2 = line.find('\t', t1 + 1);
    swapped += line.substr(t1 + 1, t2 - t1 - 1) + "\t" + line.substr(0, t1) +
               line.substr(t2) + "\n";
    pos = end + 1;
  }
  LoadResult r = LoadDataset(swapped, DatasetFormat::kTabular, Cat());
  REQUIRE(r.ok());
  CHECK(SaveDataset(r.dataset, DatasetFormat::kTabular) == text);
}

TEST_CASE("structured parse errors") {
  LoadResult bad = LoadDataset("{\n  \"format\": \"mwe-dataset\",\n  oops\n}",
                               DatasetFormat::kStructured, Cat());
  REQUIRE(bad.errors.size() == 1);
  CHECK(bad.errors[0].kind == LoadErrorKind::kParseError);
  CHECK(bad.errors[0].line == 3);

  CHECK_FALSE(LoadDataset("{\"format\": \"other\"}", DatasetFormat::kStructured, Cat()).ok());
  std::string text(SampleDatasetJson());
  text.replace(text.find("\"cells\": ["), 10, "\"cells\": [7, ");
  CHECK_FALSE(LoadDataset(text, DatasetFormat::kStructured, Cat()).ok());
}

TEST_CASE("loader sorts records by id") {
  std::string text = Header() + Row("zeta", "0000000000000000") + Row("alpha", "1000000000000000");
  LoadResult r = LoadDataset(text, DatasetFormat::kTabular, Cat());
  REQUIRE(r.ok());
  CHECK(r.dataset.records[0].id == "alpha");
  CHECK(r.dataset.Find("zeta"));
  CHECK_FALSE(r.dataset.Find("beta"));
}

TEST_CASE("format helpers") {
  CHECK(FormatForPath("x.tsv") == DatasetFormat::kTabular);
  CHECK(FormatForPath("dir/x.json") == DatasetFormat::kStructured);
  CHECK_FALSE(FormatForPath("x.txt"));
  CHECK(ParseFormat("tabular") == DatasetFormat::kTabular);
  CHECK(ParseFormat("json") == DatasetFormat::kStructured);
  CHECK_FALSE(ParseFormat("xml"));
}

TEST_CASE("writing to a missing directory fails cleanly") {
  testing::TempDir dir;
  try {
    WriteFile(dir.file("missing/sub/out.json"), "x");
    FAIL("wrote into a missing directory");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kUnwritableTarget);
  }
  WriteFile(dir.file("ok.json"), "x");
  CHECK(ReadFile(dir.file("ok.json")) == "x");
}

}  // namespace
}  // namespace mwe
