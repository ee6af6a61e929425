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

#ifndef MWE_EXPORT_H_
#define MWE_EXPORT_H_

#include <string>
#include <string_view>
#include <vector>

#include "mwe/analysis.h"
#include "mwe/criteria.h"

namespace mwe {

struct ExportTargets {
  bool tables = true;  // cube.tsv, histogram.tsv, criterion_sums.tsv, group_totals.tsv
  bool json = true;    // report.json
  bool svg = true;     // histogram.svg

  // Comma-separated subset of "tables,json,svg". Throws Error(kParseError).
  static ExportTargets Parse(std::string_view text);
};

// Tab-separated tables with a header row.
std::string CubeTable(const AnalysisReport &report);
std::string HistogramTable(const ScoreHistogram &histogram);
std::string CriterionSumsTable(const CriterionSums &sums,
                               const CriteriaCatalog &catalog);
std::string GroupTotalsTable(const GroupTotals &totals);

// Static SVG bar chart, one labeled bar per score from the lowest to the
// highest observed total.
std::string HistogramSvg(const ScoreHistogram &histogram);

// Writes the selected files into `out_dir` (created if needed) and returns
// their paths. Throws Error(kEmptyDataset) for an empty report and
// Error(kUnwritableTarget) when a file cannot be written.
std::vector<std::string> ExportReport(const AnalysisReport &report,
                                      const CriteriaCatalog &catalog,
                                      const std::string &out_dir,
                                      const ExportTargets &targets = {});

// Shortest round-trippable decimal, e.g. "2.5" or "0.3333333333333333".
std::string FormatDouble(double value);

}  // namespace mwe

#endif  // MWE_EXPORT_H_
