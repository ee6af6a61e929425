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

#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "mwe/analysis.h"
#include "mwe/dataset.h"
#include "mwe/error.h"
#include "mwe/export.h"
#include "mwe/json_io.h"
#include "test_support.h"

namespace mwe {
namespace {

const CriteriaCatalog &Cat() { return CriteriaCatalog::Default(); }

AnalysisReport SampleReport() { return BuildReport(SampleDataset().records, Cat()); }

size_t Count(const std::string &hay, const std::string &needle) {
  size_t n = 0;
  for (size_t p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

TEST_CASE("cube table") {
  std::string table = CubeTable(SampleReport());
  CHECK(table.rfind("L\tG\tO\tcount\theld_out\theld_out_mean\theld_out_mean_exact\t"
                    "color_scalar\tmembers\n", 0) == 0);
  CHECK(table.find("5\t0\t0\t2\tR\t2.5\t5/2\t0.5\tbelyi-grib,synthetic-a\n") !=
        std::string::npos);
  CHECK(Count(table, "\n") == 6);
}

TEST_CASE("histogram, criterion and group tables") {
  AnalysisReport r = SampleReport();
  CHECK(HistogramTable(r.histogram) ==
        "score\trecords\n4\t1\n6\t1\n8\t1\n9\t1\n11\t1\n12\t1\n");
  std::string sums = CriterionSumsTable(r.criterion_sums, Cat());
  CHECK(Count(sums, "\n") == 17);
  CHECK(sums.find("16\tc15\txv\treplacement\t6\t") != std::string::npos);
  std::string groups = GroupTotalsTable(r.group_totals);
  CHECK(groups.find("lexical\t25\t0.5\t1/2\n") != std::string::npos);
}

TEST_CASE("histogram svg draws one bar per score in range") {
  std::string svg = HistogramSvg(SampleReport().histogram);
  CHECK(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0) == 0);
  CHECK(Count(svg, "<g class=\"bar\"") == 9);
  CHECK(svg.find("data-score=\"9\" data-records=\"1\"") != std::string::npos);
  CHECK(svg.find("data-score=\"5\" data-records=\"0\"") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("report json mirrors the report") {
  AnalysisReport r = SampleReport();
  Json j = Json::parse(ReportToJsonText(r, Cat()));
  CHECK(j["report"] == "mwe-analysis");
  CHECK(j["n"] == 6);
  CHECK(j["histogram"]["median_exact"] == "17/2");
  CHECK(j["group_totals"]["grand_total"] == 50);
  CHECK(j["joint_low"]["count"] == 3);
  bool found = false;
  for (const auto &p : j["cube"]["points"]) {
    if (p["key"] == Json::array({5, 0, 0})) {
      found = true;
      CHECK(p["count"] == 2);
      CHECK(p["held_out_mean"] == 2.5);
      CHECK(p["held_out_mean_exact"] == "5/2");
    }
  }
  CHECK(found);
  const auto &m = j["correlation"]["matrix"];
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) CHECK(m[a][b] == m[b][a]);
  }

  AnalysisReport one = BuildReport(std::span(SampleDataset().records).first(1), Cat());
  CHECK(Json::parse(ReportToJsonText(one, Cat()))["correlation"].is_null());
}

TEST_CASE("export writes the selected targets") {
  testing::TempDir dir;
  auto written = ExportReport(SampleReport(), Cat(), dir.file("out"));
  CHECK(written.size() == 6);
  for (const char *name : {"cube.tsv", "histogram.tsv", "criterion_sums.tsv",
                           "group_totals.tsv", "report.json", "histogram.svg"}) {
    CHECK(std::filesystem::exists(dir.file(std::string("out/") + name)));
  }
  CHECK(ReadFile(dir.file("out/report.json")) == ReportToJsonText(SampleReport(), Cat()));

  auto only_svg = ExportReport(SampleReport(), Cat(), dir.file("svg"),
                               ExportTargets::Parse("svg"));
  REQUIRE(only_svg.size() == 1);
  CHECK_FALSE(std::filesystem::exists(dir.file("svg/cube.tsv")));
}

TEST_CASE("export failures") {
  testing::TempDir dir;
  CHECK_THROWS_AS(ExportTargets::Parse("tables,pdf"), Error);
  { std::ofstream(dir.file("blocker")) << "x"; }
  try {
    ExportReport(SampleReport(), Cat(), dir.file("blocker"));
    FAIL("exported into a file path");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kUnwritableTarget);
  }
  AnalysisReport empty;
  try {
    ExportReport(empty, Cat(), dir.file("empty"));
    FAIL("exported an empty report");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::kEmptyDataset);
  }
}

TEST_CASE("doubles print in shortest round-trip form") {
  CHECK(FormatDouble(2.5) == "2.5");
  CHECK(FormatDouble(0.1) == "0.1");
  CHECK(FormatDouble(3) == "3");
}

}  // namespace
}  // namespace mwe
