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

#include "mwe/json_io.h"

namespace mwe {

namespace {

void PutRational(Json &j, const std::string &key, const Rational &value) {
  j[key] = value.ToDouble();
  j[key + "_exact"] = value.ToString();
}

Json CodeList(const std::vector<CriterionId> &ids) {
  Json list = Json::array();
  for (auto id : ids) list.push_back(id.Code());
  return list;
}

Json SummaryToJson(const SubsetSummary &s) {
  Json j;
  j["count"] = s.count;
  if (s.stats) {
    j["min"] = s.stats->min;
    j["max"] = s.stats->max;
    PutRational(j, "mean", s.stats->mean);
    PutRational(j, "median", s.stats->median);
  } else {
    j["min"] = nullptr;
    j["max"] = nullptr;
    j["mean"] = nullptr;
    j["median"] = nullptr;
  }
  j["members"] = s.member_ids;
  return j;
}

}  // namespace

Json ValidationToJson(const ValidationResult &result) {
  Json j;
  j["ok"] = result.ok();
  Json list = Json::array();
  for (const auto &v : result.violations) {
    list.push_back({{"rule", RuleName(v.rule)},
                    {"criteria", CodeList(v.criteria)},
                    {"message", v.message}});
  }
  j["violations"] = std::move(list);
  return j;
}

Json EvidenceToJson(const EvidenceReport &report) {
  Json j;
  j["check"] = report.check;
  Json queries = Json::array();
  for (const auto &q : report.queries) {
    Json kwic = Json::array();
    for (const auto &line : q.kwic) {
      kwic.push_back({{"document", line.document},
                      {"offset", line.offset},
                      {"left", line.left},
                      {"match", line.match},
                      {"right", line.right}});
    }
    queries.push_back({{"query", q.query},
                       {"raw_hits", q.raw_hits},
                       {"effective_hits", q.effective_hits},
                       {"kwic", std::move(kwic)}});
  }
  j["queries"] = std::move(queries);
  auto realizations = [](const std::vector<Realization> &list) {
    Json out = Json::array();
    for (const auto &r : list) {
      out.push_back({{"surface", r.surface},
                     {"raw_count", r.raw_count},
                     {"canonical", r.canonical}});
    }
    return out;
  };
  j["realizations"] = realizations(report.realizations);
  j["discarded"] = realizations(report.discarded);
  Json suggestions = Json::array();
  for (const auto &s : report.suggestions) {
    Json item;
    item["criterion"] = s.criterion.Code();
    item["roman"] = s.criterion.Roman();
    item["suggestion"] =
        s.suggestion ? Json(SuggestionName(*s.suggestion)) : Json(nullptr);
    item["error"] = s.error ? Json(ErrorCodeName(*s.error)) : Json(nullptr);
    item["note"] = s.note;
    suggestions.push_back(std::move(item));
  }
  j["suggestions"] = std::move(suggestions);
  return j;
}

Json CatalogToJson(const CriteriaCatalog &catalog) {
  Json j;
  j["version"] = catalog.version();
  Json criteria = Json::array();
  for (const auto &e : catalog.entries()) {
    criteria.push_back({{"ordinal", e.id.ordinal()},
                        {"code", e.code},
                        {"roman", e.id.Roman()},
                        {"group", GroupName(e.group)},
                        {"name", e.name},
                        {"inapplicable_when_headless",
                         e.inapplicable_when_headless}});
  }
  j["criteria"] = std::move(criteria);
  Json pairs = Json::array();
  for (const auto &[a, b] : catalog.exclusion_pairs()) {
    pairs.push_back({a.Code(), b.Code()});
  }
  j["exclusion_pairs"] = std::move(pairs);
  Json groups = Json::array();
  for (Group g : kAllGroups) {
    groups.push_back({{"group", GroupName(g)},
                      {"letter", std::string(1, GroupLetter(g))},
                      {"members", CodeList(catalog.members(g).ids())},
                      {"max", catalog.group_max(g)}});
  }
  j["groups"] = std::move(groups);
  return j;
}

Json ReportToJson(const AnalysisReport &report,
                  const CriteriaCatalog &catalog) {
  Json j;
  j["report"] = "mwe-analysis";
  j["report_version"] = 1;
  j["catalog_version"] = report.catalog_version;
  j["n"] = report.n;

  const auto &h = report.histogram;
  Json hist;
  Json counts = Json::array();
  for (const auto &[score, n] : h.counts) {
    counts.push_back({{"score", score}, {"records", n}});
  }
  hist["counts"] = std::move(counts);
  hist["n"] = h.n;
  PutRational(hist, "median", h.median);
  PutRational(hist, "range_midpoint", h.range_midpoint);
  hist["below_median"] = h.below_median;
  PutRational(hist, "below_median_fraction", Rational(h.below_median, h.n));
  hist["below_range_midpoint"] = h.below_range_midpoint;
  PutRational(hist, "below_range_midpoint_fraction",
              Rational(h.below_range_midpoint, h.n));
  j["histogram"] = std::move(hist);

  const auto &cs = report.criterion_sums;
  Json sums;
  Json by_code = Json::object();
  for (int i = 0; i < kNumCriteria; ++i) {
    by_code[Criterion(i + 1).Code()] = cs.counts[i];
  }
  sums["counts"] = std::move(by_code);
  sums["ranked"] = CodeList(cs.ranked);
  j["criterion_sums"] = std::move(sums);

  const auto &gt = report.group_totals;
  Json totals;
  for (Group g : kAllGroups) {
    Json item;
    item["total"] = gt.totals[GroupIndex(g)];
    if (const auto &share = gt.shares[GroupIndex(g)]) {
      PutRational(item, "share", *share);
    } else {
      item["share"] = nullptr;
      item["share_exact"] = nullptr;
    }
    totals[std::string(GroupName(g))] = std::move(item);
  }
  totals["grand_total"] = gt.grand_total;
  j["group_totals"] = std::move(totals);

  Json unique;
  unique["distinct"] = report.unique_vectors.distinct;
  unique["n"] = report.unique_vectors.n;
  PutRational(unique, "fraction", report.unique_vectors.fraction);
  j["unique_vectors"] = std::move(unique);

  Json cube;
  Json axes = Json::array();
  for (Group g : report.axes.axes) axes.push_back(std::string(1, GroupLetter(g)));
  cube["axes"] = std::move(axes);
  cube["held_out"] = std::string(1, GroupLetter(report.axes.held_out));
  cube["held_out_max"] = catalog.group_max(report.axes.held_out);
  Json points = Json::array();
  for (const auto &p : report.cube) {
    Json point;
    point["key"] = p.key;
    point["count"] = p.count;
    PutRational(point, "held_out_mean", p.held_out_mean);
    PutRational(point, "color_scalar", p.color_scalar);
    point["members"] = p.member_ids;
    points.push_back(std::move(point));
  }
  cube["points"] = std::move(points);
  j["cube"] = std::move(cube);

  if (report.correlation) {
    Json corr;
    corr["groups"] = {"L", "G", "O", "R"};
    Json matrix = Json::array();
    for (const auto &row : report.correlation->values) {
      Json r = Json::array();
      for (const auto &v : row) r.push_back(v ? Json(*v) : Json(nullptr));
      matrix.push_back(std::move(r));
    }
    corr["matrix"] = std::move(matrix);
    j["correlation"] = std::move(corr);
  } else {
    j["correlation"] = nullptr;
  }

  j["joint_low"] = {{"groups", {"O", "R"}},
                    {"threshold", 3},
                    {"count", report.joint_low_obsolescence_replacement}};
  j["obsolescence_max"] = SummaryToJson(report.obsolescence_max);
  return j;
}

std::string ReportToJsonText(const AnalysisReport &report,
                             const CriteriaCatalog &catalog) {
  return ReportToJson(report, catalog).dump(2) + "\n";
}

}  // namespace mwe
