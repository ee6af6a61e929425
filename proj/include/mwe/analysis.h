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

#ifndef MWE_ANALYSIS_H_
#define MWE_ANALYSIS_H_

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mwe/criteria.h"
#include "mwe/rational.h"

namespace mwe {

// Dataset statistics. Every function expects validated records (see
// ValidateRecord) and throws Error(kEmptyDataset) on an empty input unless
// noted otherwise.

struct ScoreHistogram {
  std::map<int, int> counts;  // total score -> number of records
  int n = 0;
  // Order-statistic median (mean of the two middle values for even n).
  Rational median;
  // (min + max) / 2 over observed totals.
  Rational range_midpoint;
  int below_median = 0;          // totals strictly below `median`
  int below_range_midpoint = 0;  // totals strictly below `range_midpoint`
};

ScoreHistogram ComputeScoreHistogram(std::span<const MweRecord> records);

struct CriterionSums {
  int n = 0;
  std::array<int, kNumCriteria> counts{};  // records with the cell set
  // Ascending by count, ties by ordinal.
  std::vector<CriterionId> ranked;

  int count(CriterionId id) const { return counts[id.index()]; }
};

CriterionSums ComputeCriterionSums(std::span<const MweRecord> records);

struct GroupTotals {
  std::array<long long, kNumGroups> totals{};
  long long grand_total = 0;
  // Share of the grand total; empty when the grand total is 0.
  std::array<std::optional<Rational>, kNumGroups> shares;
};

GroupTotals ComputeGroupTotals(std::span<const MweRecord> records,
                               const CriteriaCatalog &catalog);

struct UniqueVectors {
  int distinct = 0;
  int n = 0;
  Rational fraction;
};

UniqueVectors CountUniqueVectors(std::span<const MweRecord> records);

// Three group axes plus the held-out group that colors the points.
struct CubeAxes {
  std::array<Group, 3> axes = {Group::kLexical, Group::kGrammatical,
                               Group::kObsolescence};
  Group held_out = Group::kReplacement;

  // Parses "L,G,O" style axis lists (letters or group names) and a held-out
  // group. Throws Error(kParseError) for unknown names and
  // Error(kAxisOverlap) when the four groups are not all distinct.
  static CubeAxes Parse(std::string_view axes, std::string_view held_out);

  // Throws Error(kAxisOverlap).
  void Validate() const;

  // "L,G,O"
  std::string AxesString() const;
};

struct AggregatedPoint {
  std::array<int, 3> key{};
  int count = 0;
  Rational held_out_mean;
  // held_out_mean divided by the held-out group's maximum.
  Rational color_scalar;
  std::vector<std::string> member_ids;  // sorted
};

// Groups records by their axis triple. Points are ordered by key.
std::vector<AggregatedPoint> AggregateCube(std::span<const MweRecord> records,
                                           const CriteriaCatalog &catalog,
                                           const CubeAxes &axes);

// Pearson correlation of per-record group sums. An entry is empty when
// either group has zero variance.
struct GroupCorrelationMatrix {
  std::array<std::array<std::optional<double>, kNumGroups>, kNumGroups>
      values;

  const std::optional<double> &at(Group a, Group b) const {
    return values[GroupIndex(a)][GroupIndex(b)];
  }
};

// Throws Error(kTooFewRecords) for fewer than two records.
GroupCorrelationMatrix ComputeGroupCorrelation(
    std::span<const MweRecord> records, const CriteriaCatalog &catalog);

// Records whose sums in both groups are strictly below `threshold`. Throws
// Error(kSameGroup) when a == b. An empty input yields 0.
int JointLowScoreCount(std::span<const MweRecord> records,
                       const CriteriaCatalog &catalog, Group a, Group b,
                       int threshold);

struct SubsetSummary {
  struct Stats {
    int min = 0;
    int max = 0;
    Rational mean;
    Rational median;
  };
  int count = 0;
  std::optional<Stats> stats;  // empty when no record matched
  std::vector<std::string> member_ids;
};

// Summary of total scores over records whose group vector satisfies the
// predicate. Never throws for an empty input.
SubsetSummary SummarizeSubset(
    std::span<const MweRecord> records, const CriteriaCatalog &catalog,
    const std::function<bool(const GroupVector &)> &predicate);

// Everything the exporters and the service publish, computed in one place.
struct AnalysisReport {
  std::string catalog_version;
  int n = 0;
  CubeAxes axes;
  ScoreHistogram histogram;
  CriterionSums criterion_sums;
  GroupTotals group_totals;
  UniqueVectors unique_vectors;
  std::vector<AggregatedPoint> cube;
  std::optional<GroupCorrelationMatrix> correlation;  // needs n >= 2
  // Records below 3 in both obsolescence and replacement.
  int joint_low_obsolescence_replacement = 0;
  // Records reaching the obsolescence maximum.
  SubsetSummary obsolescence_max;
};

AnalysisReport BuildReport(std::span<const MweRecord> records,
                           const CriteriaCatalog &catalog,
                           const CubeAxes &axes = {});

}  // namespace mwe

#endif  // MWE_ANALYSIS_H_
