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

#include <atomic>
#include <thread>

#include "doctest.h"
#include "httplib.h"
#include "mwe/dataset.h"
#include "mwe/error.h"
#include "mwe/json_io.h"
#include "mwe/service.h"
#include "test_support.h"

namespace mwe {
namespace {

using Params = std::multimap<std::string, std::string>;

const CriteriaCatalog &Cat() { return CriteriaCatalog::Default(); }

std::string CellsBody(std::uint32_t mask) {
  Json cells = Json::array();
  for (int i = 0; i < kNumCriteria; ++i) cells.push_back(static_cast<int>(mask >> i & 1u));
  return Json{{"cells", cells}}.dump();
}

AnnotationSession::Response Get(AnnotationSession &s, const std::string &path,
                                Params params = {}) {
  return s.Handle("GET", path, params, "");
}

TEST_CASE("read-only routes") {
  AnnotationSession s(SampleDataset(), Cat());
  CHECK(Get(s, "/health").body["status"] == "ok");

  auto catalog = Get(s, "/catalog");
  CHECK(catalog.status == 200);
  CHECK(catalog.body["criteria"].size() == 16);
  CHECK(catalog.body["exclusion_pairs"][0] == Json::array({"c06", "c07"}));

  auto list = Get(s, "/records");
  REQUIRE(list.status == 200);
  REQUIRE(list.body["records"].size() == 6);
  CHECK(list.body["records"][0]["id"] == "belyi-grib");
  CHECK(list.body["records"][0]["total"] == 9);
  CHECK(list.body["records"][0]["group_vector"] == Json::array({5, 0, 0, 4}));
  CHECK(list.body["records"][0]["completion"] == "complete");

  auto one = Get(s, "/records/tak-i-byt");
  REQUIRE(one.status == 200);
  CHECK(one.body["total"] == 12);
  CHECK(one.body["applicable"].size() == 13);
  CHECK(one.body["record"]["features"]["is_sentence"] == true);
}

TEST_CASE("routing errors") {
  AnnotationSession s(SampleDataset(), Cat());
  auto missing = Get(s, "/records/nope");
  CHECK(missing.status == 404);
  CHECK(missing.body["error"] == "UnknownId");
  CHECK(Get(s, "/nowhere").status == 404);
  CHECK(s.Handle("POST", "/records", {}, "").status == 405);
  CHECK(s.Handle("GET", "/records/belyi-grib/annotation", {}, "").status == 405);
  CHECK(Get(s, "/analysis", {{"axes", "L,L,O"}}).status == 400);
  CHECK(Get(s, "/analysis", {{"axes", "L,G,X"}}).status == 400);

  AnnotationSession empty(Cat());
  auto no_data = Get(empty, "/records");
  CHECK(no_data.status == 409);
  CHECK(no_data.body["error"] == "NoDataset");
}

TEST_CASE("annotation edits") {
  testing::TempDir dir;
  ServiceOptions options;
  options.autosave_path = dir.file("autosave.json");
  AnnotationSession s(SampleDataset(), Cat(), options);

  SUBCASE("an accepted edit is scored and autosaved") {
    auto r = s.Handle("PUT", "/records/synthetic-a/annotation", {}, CellsBody(0x001Fu));
    REQUIRE(r.status == 200);
    CHECK(r.body["accepted"] == true);
    CHECK(r.body["total"] == 5);
    CHECK(r.body["group_vector"] == Json::array({5, 0, 0, 0}));
    CHECK_FALSE(s.dirty());
    LoadResult saved = LoadDataset(ReadFile(options.autosave_path),
                                   DatasetFormat::kStructured, Cat());
    REQUIRE(saved.ok());
    CHECK(saved.dataset == s.Snapshot());
    CHECK(saved.dataset.Find("synthetic-a")->annotation.mask() == 0x001Fu);
  }

  SUBCASE("a rejected edit becomes a draft") {
    auto r = s.Handle("PUT", "/records/belyi-grib/annotation", {},
                      CellsBody((1u << 5) | (1u << 6)));
    REQUIRE(r.status == 422);
    CHECK(r.body["error"] == "ValidationError");
    CHECK(r.body["violations"][0]["rule"] == "MutualExclusion");
    CHECK(r.body["completion"] == "draft");
    CHECK(s.dirty());
    CHECK_FALSE(std::filesystem::exists(options.autosave_path));
    CHECK(Get(s, "/records").body["records"][0]["completion"] == "draft");
    CHECK(Get(s, "/analysis").body["n"] == 5);
  }

  SUBCASE("inapplicable cells on a sentence") {
    auto r = s.Handle("PUT", "/records/tak-i-byt/annotation", {}, CellsBody(1u << 13));
    CHECK(r.status == 422);
    CHECK(r.body["violations"][0]["rule"] == "InapplicableSet");
  }

  SUBCASE("notes are kept unless the body replaces them") {
    MweRecord before = s.GetRecord("belyi-grib");
    REQUIRE(before.annotation.has_notes());
    s.Handle("PUT", "/records/belyi-grib/annotation", {}, CellsBody(before.annotation.mask()));
    CHECK(s.GetRecord("belyi-grib").annotation == before.annotation);
    Json body = {{"cells", Json::parse(CellsBody(before.annotation.mask()))["cells"]},
                 {"notes", {{"c01", "rewritten"}}}};
    CHECK(s.Handle("PUT", "/records/belyi-grib/annotation", {}, body.dump()).status == 200);
    MweRecord after = s.GetRecord("belyi-grib");
    CHECK(after.annotation.note(Criterion(1)) == "rewritten");
    CHECK(after.annotation.note(Criterion(8)).empty());
  }

  SUBCASE("malformed bodies and unknown ids") {
    CHECK(s.Handle("PUT", "/records/belyi-grib/annotation", {}, "{").status == 400);
    CHECK(s.Handle("PUT", "/records/belyi-grib/annotation", {}, "{\"cells\": [1]}").status == 400);
    CHECK(s.Handle("PUT", "/records/nope/annotation", {}, CellsBody(0)).status == 404);
  }
}

TEST_CASE("read-only sessions reject edits") {
  ServiceOptions options;
  options.read_only = true;
  AnnotationSession s(SampleDataset(), Cat(), options);
  auto r = s.Handle("PUT", "/records/belyi-grib/annotation", {}, CellsBody(0));
  CHECK(r.status == 409);
  CHECK(r.body["error"] == "ReadOnlyMode");
  CHECK(Get(s, "/records/belyi-grib").body["total"] == 9);
}

TEST_CASE("corpus checks") {
  Dataset d = SampleDataset();
  MweRecord bare = d.records[0];
  bare.id = "no-stems";
  bare.token_stems.clear();
  d.records.push_back(bare);
  AnnotationSession s(d, Cat());

  auto no_corpus = s.Handle("POST", "/records/belyi-grib/check/insertion", {}, "");
  CHECK(no_corpus.status == 409);
  CHECK(no_corpus.body["error"] == "NoCorpus");

  std::vector<std::string> docs = {"белый гриб", "белый гриб", "белый крупный гриб",
                                   "белого гриба", "белого гриба"};
  s.SetCorpus(std::make_shared<CorpusIndex>(CorpusIndex::Build(docs, {})));

  auto ins = s.Handle("POST", "/records/belyi-grib/check/insertion", {}, "");
  REQUIRE(ins.status == 200);
  CHECK(ins.body["cells"].size() == 16);
  const Json &report = ins.body["report"];
  CHECK(report["check"] == "insertion");
  CHECK(report["queries"][1]["raw_hits"] == 1);
  CHECK(report["queries"][1]["effective_hits"] == 0);
  CHECK(report["suggestions"][0]["criterion"] == "c05");
  CHECK(report["suggestions"][0]["suggestion"] == "supports_1");

  auto inf = s.Handle("POST", "/records/belyi-grib/check/inflection", {}, "");
  REQUIRE(inf.status == 200);
  CHECK(inf.body["report"]["realizations"].size() == 2);

  CHECK(s.Handle("POST", "/records/no-stems/check/inflection", {}, "").status == 422);
  CHECK(s.Handle("POST", "/records/no-stems/check/insertion", {}, "").status == 200);
  CHECK(s.Handle("POST", "/records/belyi-grib/check/spelling", {}, "").status == 400);
  CHECK(s.Handle("POST", "/records/nope/check/insertion", {}, "").status == 404);
  // The evidence is advisory: the stored vector is untouched.
  CHECK(s.GetRecord("belyi-grib") == d.records[0]);
}

TEST_CASE("concurrent edits and reads keep records consistent") {
  AnnotationSession s(SampleDataset(), Cat());
  const std::vector<std::string> ids = {"belyi-grib", "synthetic-a", "bespokoinyi-chelovek"};
  std::atomic<int> failures{0};
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      std::mt19937 rng(t);
      for (int i = 0; i < 200; ++i) {
        const std::string &id = ids[rng() % ids.size()];
        if (t % 2 == 0) {
          std::uint32_t mask = rng() & 0xFF9Fu;  // never vi or vii
          auto r = s.Handle("PUT", "/records/" + id + "/annotation", {}, CellsBody(mask));
          if (r.status != 200) ++failures;
        } else {
          auto r = Get(s, "/analysis");
          if (r.status != 200 || r.body["n"] != 6) ++failures;
        }
      }
    });
  }
  for (auto &t : threads) t.join();
  CHECK(failures == 0);
  for (const auto &r : s.Snapshot().records) CHECK(ValidateRecord(r, Cat()).ok());
}

TEST_CASE("live HTTP round trip") {
  AnnotationSession s(SampleDataset(), Cat());
  HttpServer server(s);
  int port = server.BindToAnyPort("127.0.0.1");
  REQUIRE(port > 0);
  std::thread loop([&] { server.ListenAfterBind(); });

  httplib::Client client("127.0.0.1", port);
  auto analysis = client.Get("/analysis");
  REQUIRE(analysis);
  CHECK(analysis->status == 200);
  CHECK(analysis->get_header_value("Content-Type") == "application/json");
  CHECK(analysis->body == Get(s, "/analysis").body.dump(2) + "\n");

  auto put = client.Put("/records/synthetic-a/annotation", CellsBody(0x000Fu),
                        "application/json");
  REQUIRE(put);
  CHECK(put->status == 200);
  CHECK(Json::parse(put->body)["total"] == 4);

  auto bad = client.Put("/records/synthetic-a/annotation", CellsBody(0x0060u),
                        "application/json");
  REQUIRE(bad);
  CHECK(bad->status == 422);

  auto del = client.Delete("/records/synthetic-a");
  REQUIRE(del);
  CHECK(del->status == 405);
  CHECK(Json::parse(del->body)["error"] == "MethodNotAllowed");

  auto missing = client.Get("/records/nope");
  REQUIRE(missing);
  CHECK(missing->status == 404);

  server.Stop();
  loop.join();
}

}  // namespace
}  // namespace mwe
