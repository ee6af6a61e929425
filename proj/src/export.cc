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

#include "mwe/export.h"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <sstream>

#include "mwe/dataset.h"
#include "mwe/error.h"
#include "mwe/json_io.h"

namespace mwe {

namespace {

std::string Letter(Group g) { return std::string(1, GroupLetter(g)); }

std::string JoinIds(const std::vector<std::string> &ids) {
  std::string out;
  for (const auto &id : ids) {
    if (!out.empty()) out += ',';
    out += id;
  }
  return out;
}

}  // namespace

std::string FormatDouble(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return ec == std::errc() ? std::string(buf, end) : std::to_string(value);
}

ExportTargets ExportTargets::Parse(std::string_view text) {
  ExportTargets t{false, false, false};
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = text.substr(pos, comma - pos);
    if (item == "tables") {
      t.tables = true;
    } else if (item == "json") {
      t.json = true;
    } else if (item == "svg") {
      t.svg = true;
    } else {
      throw Error(ErrorCode::kParseError,
                  "unknown export target '" + std::string(item) + "'");
    }
    pos = comma + 1;
  }
  return t;
}

std::string CubeTable(const AnalysisReport &report) {
  const auto &axes = report.axes;
  std::ostringstream out;
  out << Letter(axes.axes[0]) << '\t' << Letter(axes.axes[1]) << '\t'
      << Letter(axes.axes[2]) << "\tcount\theld_out\theld_out_mean"
      << "\theld_out_mean_exact\tcolor_scalar\tmembers\n";
  for (const auto &p : report.cube) {
    out << p.key[0] << '\t' << p.key[1] << '\t' << p.key[2] << '\t' << p.count
        << '\t' << Letter(axes.held_out) << '\t'
        << FormatDouble(p.held_out_mean.ToDouble()) << '\t'
        << p.held_out_mean.ToString() << '\t'
        << FormatDouble(p.color_scalar.ToDouble()) << '\t'
        << JoinIds(p.member_ids) << '\n';
  }
  return out.str();
}

std::string HistogramTable(const ScoreHistogram &histogram) {
  std::ostringstream out;
  out << "score\trecords\n";
  for (const auto &[score, n] : histogram.counts) {
    out << score << '\t' << n << '\n';
  }
  return out.str();
}

std::string CriterionSumsTable(const CriterionSums &sums,
                               const CriteriaCatalog &catalog) {
  std::ostringstream out;
  out << "rank\tcode\troman\tgroup\tcount\tname\n";
  int rank = 0;
  for (auto id : sums.ranked) {
    const auto &info = catalog.info(id);
    out << ++rank << '\t' << info.code << '\t' << id.Roman() << '\t'
        << GroupName(info.group) << '\t' << sums.count(id) << '\t'
        << info.name << '\n';
  }
  return out.str();
}

std::string GroupTotalsTable(const GroupTotals &totals) {
  std::ostringstream out;
  out << "group\ttotal\tshare\tshare_exact\n";
  for (Group g : kAllGroups) {
    const auto &share = totals.shares[GroupIndex(g)];
    out << GroupName(g) << '\t' << totals.totals[GroupIndex(g)] << '\t'
        << (share ? FormatDouble(share->ToDouble()) : "") << '\t'
        << (share ? share->ToString() : "") << '\n';
  }
  return out.str();
}

std::string HistogramSvg(const ScoreHistogram &histogram) {
  constexpr int kBarWidth = 40;
  constexpr int kGap = 10;
  constexpr int kLeft = 50;
  constexpr int kTop = 40;
  constexpr int kPlotHeight = 200;

  std::vector<std::pair<int, int>> bars;
  if (!histogram.counts.empty()) {
    int lo = histogram.counts.begin()->first;
    int hi = histogram.counts.rbegin()->first;
    for (int s = lo; s <= hi; ++s) {
      auto it = histogram.counts.find(s);
      bars.push_back({s, it == histogram.counts.end() ? 0 : it->second});
    }
  }
  int peak = 1;
  for (const auto &[s, n] : bars) peak = std::max(peak, n);

  const int width = kLeft + static_cast<int>(bars.size()) * (kBarWidth + kGap) + kGap;
  const int height = kTop + kPlotHeight + 50;
  const int baseline = kTop + kPlotHeight;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg << "  <title>Total score distribution (n=" << histogram.n
      << ")</title>\n";
  svg << "  <text x=\"" << kLeft << "\" y=\"20\" font-size=\"14\">"
      << "Records per total score (n=" << histogram.n << ")</text>\n";
  svg << "  <line x1=\"" << kLeft << "\" y1=\"" << baseline << "\" x2=\""
      << width - kGap << "\" y2=\"" << baseline
      << "\" stroke=\"black\"/>\n";
  int x = kLeft + kGap;
  for (const auto &[score, n] : bars) {
    int h = n * kPlotHeight / peak;
    svg << "  <g class=\"bar\" data-score=\"" << score << "\" data-records=\""
        << n << "\">\n";
    svg << "    <rect x=\"" << x << "\" y=\"" << baseline - h
        << "\" width=\"" << kBarWidth << "\" height=\"" << h
        << "\" fill=\"#4878a8\"/>\n";
    svg << "    <text x=\"" << x + kBarWidth / 2 << "\" y=\""
        << baseline - h - 4 << "\" text-anchor=\"middle\">" << n
        << "</text>\n";
    svg << "    <text x=\"" << x + kBarWidth / 2 << "\" y=\"" << baseline + 16
        << "\" text-anchor=\"middle\">" << score << "</text>\n";
    svg << "  </g>\n";
    x += kBarWidth + kGap;
  }
  svg << "  <text x=\"" << width / 2 << "\" y=\"" << height - 8
      << "\" text-anchor=\"middle\">total score</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

std::vector<std::string> ExportReport(const AnalysisReport &report,
                                      const CriteriaCatalog &catalog,
                                      const std::string &out_dir,
                                      const ExportTargets &targets) {
  if (report.n == 0) {
    throw Error(ErrorCode::kEmptyDataset, "refusing to export an empty report");
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec || !std::filesystem::is_directory(out_dir)) {
    throw Error(ErrorCode::kUnwritableTarget,
                "cannot create output directory " + out_dir);
  }
  std::vector<std::string> written;
  auto write = [&](const std::string &name, const std::string &content) {
    std::string path = (std::filesystem::path(out_dir) / name).string();
    WriteFile(path, content);
    written.push_back(path);
  };
  if (targets.tables) {
    write("cube.tsv", CubeTable(report));
    write("histogram.tsv", HistogramTable(report.histogram));
    write("criterion_sums.tsv", CriterionSumsTable(report.criterion_sums, catalog));
    write("group_totals.tsv", GroupTotalsTable(report.group_totals));
  }
  if (targets.json) write("report.json", ReportToJsonText(report, catalog));
  if (targets.svg) write("histogram.svg", HistogramSvg(report.histogram));
  return written;
}

}  // namespace mwe
