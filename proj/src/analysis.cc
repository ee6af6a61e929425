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

#include "mwe/analysis.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

#include "mwe/error.h"

namespace mwe {

namespace {

void RequireNonEmpty(std::span<const MweRecord> records) {
  if (records.empty()) {
    throw Error(ErrorCode::kEmptyDataset, "dataset has no records");
  }
}

// Median of a sorted, non-empty list.
Rational SortedMedian(const std::vector<int> &sorted) {
  size_t n = sorted.size();
  if (n % 2 == 1) return sorted[n / 2];
  return Rational(sorted[n / 2 - 1] + sorted[n / 2], 2);
}

}  // namespace

ScoreHistogram ComputeScoreHistogram(std::span<const MweRecord> records) {
  RequireNonEmpty(records);
  ScoreHistogram h;
  std::vector<int> totals;
  for (const auto &r : records) totals.push_back(TotalScore(r.annotation));
  std::sort(totals.begin(), totals.end());
  for (int t : totals) ++h.counts[t];
  h.n = static_cast<int>(totals.size());
  h.median = SortedMedian(totals);
  h.range_midpoint = Rational(totals.front() + totals.back(), 2);
  for (int t : totals) {
    if (Rational(t) < h.median) ++h.below_median;
    if (Rational(t) < h.range_midpoint) ++h.below_range_midpoint;
  }
  return h;
}

CriterionSums ComputeCriterionSums(std::span<const MweRecord> records) {
  RequireNonEmpty(records);
  CriterionSums sums;
  sums.n = static_cast<int>(records.size());
  for (const auto &r : records) {
    std::uint32_t mask = r.annotation.mask();
    for (int i = 0; i < kNumCriteria; ++i) sums.counts[i] += (mask >> i) & 1u;
  }
  sums.ranked = CriterionSet::All().ids();
  std::stable_sort(sums.ranked.begin(), sums.ranked.end(),
                   [&](CriterionId a, CriterionId b) {
                     return sums.count(a) < sums.count(b);
                   });
  return sums;
}

GroupTotals ComputeGroupTotals(std::span<const MweRecord> records,
                               const CriteriaCatalog &catalog) {
  RequireNonEmpty(records);
  GroupTotals t;
  for (const auto &r : records) {
    GroupVector v = ToGroupVector(r.annotation, catalog);
    for (int g = 0; g < kNumGroups; ++g) t.totals[g] += v.sums[g];
  }
  for (long long x : t.totals) t.grand_total += x;
  if (t.grand_total > 0) {
    for (int g = 0; g < kNumGroups; ++g) {
      t.shares[g] = Rational(t.totals[g], t.grand_total);
    }
  }
  return t;
}

UniqueVectors CountUniqueVectors(std::span<const MweRecord> records) {
  RequireNonEmpty(records);
  std::set<std::uint32_t> masks;
  for (const auto &r : records) masks.insert(r.annotation.mask());
  UniqueVectors u;
  u.distinct = static_cast<int>(masks.size());
  u.n = static_cast<int>(records.size());
  u.fraction = Rational(u.distinct, u.n);
  return u;
}

CubeAxes CubeAxes::Parse(std::string_view axes, std::string_view held_out) {
  CubeAxes result;
  std::vector<std::string_view> parts;
  size_t pos = 0;
  while (true) {
    size_t comma = axes.find(',', pos);
    parts.push_back(axes.substr(pos, comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (parts.size() != 3) {
    throw Error(ErrorCode::kParseError,
                "expected three comma-separated axes, got '" +
                    std::string(axes) + "'");
  }
  for (int i = 0; i < 3; ++i) {
    auto g = ParseGroup(parts[i]);
    if (!g) {
      throw Error(ErrorCode::kParseError,
                  "unknown group '" + std::string(parts[i]) + "'");
    }
    result.axes[i] = *g;
  }
  auto h = ParseGroup(held_out);
  if (!h) {
    throw Error(ErrorCode::kParseError,
                "unknown group '" + std::string(held_out) + "'");
  }
  result.held_out = *h;
  result.Validate();
  return result;
}

void CubeAxes::Validate() const {
  std::set<Group> all(axes.begin(), axes.end());
  all.insert(held_out);
  if (all.size() != kNumGroups) {
    throw Error(ErrorCode::kAxisOverlap,
                "axes " + AxesString() + " and held-out " +
                    std::string(1, GroupLetter(held_out)) +
                    " must cover the four groups exactly once");
  }
}

std::string CubeAxes::AxesString() const {
  std::string s;
  for (Group g : axes) {
    if (!s.empty()) s += ',';
    s += GroupLetter(g);
  }
  return s;
}

std::vector<AggregatedPoint> AggregateCube(std::span<const MweRecord> records,
                                           const CriteriaCatalog &catalog,
                                           const CubeAxes &axes) {
  axes.Validate();
  RequireNonEmpty(records);

  struct Cell {
    int count = 0;
    long long held_out_sum = 0;
    std::vector<std::string> ids;
  };
  std::map<std::array<int, 3>, Cell> cells;
  for (const auto &r : records) {
    GroupVector v = ToGroupVector(r.annotation, catalog);
    std::array<int, 3> key = {v[axes.axes[0]], v[axes.axes[1]],
                              v[axes.axes[2]]};
    Cell &cell = cells[key];
    ++cell.count;
    cell.held_out_sum += v[axes.held_out];
    cell.ids.push_back(r.id);
  }

  const int held_max = catalog.group_max(axes.held_out);
  std::vector<AggregatedPoint> points;
  for (auto &[key, cell] : cells) {
    AggregatedPoint p;
    p.key = key;
    p.count = cell.count;
    p.held_out_mean = Rational(cell.held_out_sum, cell.count);
    p.color_scalar =
        held_max > 0 ? p.held_out_mean / Rational(held_max) : Rational(0);
    p.member_ids = std::move(cell.ids);
    std::sort(p.member_ids.begin(), p.member_ids.end());
    points.push_back(std::move(p));
  }
  return points;
}

GroupCorrelationMatrix ComputeGroupCorrelation(
    std::span<const MweRecord> records, const CriteriaCatalog &catalog) {
  if (records.size() < 2) {
    throw Error(ErrorCode::kTooFewRecords,
                "correlation needs at least two records");
  }
  // Integer moments keep the matrix exactly symmetric and order-independent.
  const long long n = static_cast<long long>(records.size());
  std::array<long long, kNumGroups> sum{};
  std::array<std::array<long long, kNumGroups>, kNumGroups> cross{};
  for (const auto &r : records) {
    GroupVector v = ToGroupVector(r.annotation, catalog);
    for (int a = 0; a < kNumGroups; ++a) {
      sum[a] += v.sums[a];
      for (int b = 0; b < kNumGroups; ++b) cross[a][b] += v.sums[a] * v.sums[b];
    }
  }
  auto co = [&](int a, int b) { return n * cross[a][b] - sum[a] * sum[b]; };

  GroupCorrelationMatrix m;
  for (int a = 0; a < kNumGroups; ++a) {
    for (int b = 0; b < kNumGroups; ++b) {
      long long va = co(a, a), vb = co(b, b);
      if (va == 0 || vb == 0) continue;
      if (a == b) {
        m.values[a][b] = 1.0;
        continue;
      }
      double r = static_cast<double>(co(a, b)) /
                 std::sqrt(static_cast<double>(va) * static_cast<double>(vb));
      m.values[a][b] = std::clamp(r, -1.0, 1.0);
    }
  }
  return m;
}

int JointLowScoreCount(std::span<const MweRecord> records,
                       const CriteriaCatalog &catalog, Group a, Group b,
                       int threshold) {
  if (a == b) {
    throw Error(ErrorCode::kSameGroup, "joint count needs two distinct groups");
  }
  int count = 0;
  for (const auto &r : records) {
    GroupVector v = ToGroupVector(r.annotation, catalog);
    if (v[a] < threshold && v[b] < threshold) ++count;
  }
  return count;
}

SubsetSummary SummarizeSubset(
    std::span<const MweRecord> records, const CriteriaCatalog &catalog,
    const std::function<bool(const GroupVector &)> &predicate) {
  SubsetSummary s;
  std::vector<int> totals;
  long long total_sum = 0;
  for (const auto &r : records) {
    if (!predicate(ToGroupVector(r.annotation, catalog))) continue;
    int t = TotalScore(r.annotation);
    totals.push_back(t);
    total_sum += t;
    s.member_ids.push_back(r.id);
  }
  std::sort(s.member_ids.begin(), s.member_ids.end());
  s.count = static_cast<int>(totals.size());
  if (totals.empty()) return s;
  std::sort(totals.begin(), totals.end());
  s.stats = SubsetSummary::Stats{totals.front(), totals.back(),
                                 Rational(total_sum, s.count),
                                 SortedMedian(totals)};
  return s;
}

AnalysisReport BuildReport(std::span<const MweRecord> records,
                           const CriteriaCatalog &catalog,
                           const CubeAxes &axes) {
  axes.Validate();
  RequireNonEmpty(records);
  AnalysisReport report;
  report.catalog_version = catalog.version();
  report.n = static_cast<int>(records.size());
  report.axes = axes;
  report.histogram = ComputeScoreHistogram(records);
  report.criterion_sums = ComputeCriterionSums(records);
  report.group_totals = ComputeGroupTotals(records, catalog);
  report.unique_vectors = CountUniqueVectors(records);
  report.cube = AggregateCube(records, catalog, axes);
  if (records.size() >= 2) {
    report.correlation = ComputeGroupCorrelation(records, catalog);
  }
  report.joint_low_obsolescence_replacement = JointLowScoreCount(
      records, catalog, Group::kObsolescence, Group::kReplacement, 3);
  const int obs_max = catalog.group_max(Group::kObsolescence);
  report.obsolescence_max = SummarizeSubset(
      records, catalog, [obs_max](const GroupVector &v) {
        return v[Group::kObsolescence] == obs_max;
      });
  return report;
}

}  // namespace mwe
