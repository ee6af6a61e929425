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

#include "mwe/cli.h"

#include <cstdlib>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "mwe/analysis.h"
#include "mwe/corpus.h"
#include "mwe/dataset.h"
#include "mwe/error.h"
#include "mwe/evidence.h"
#include "mwe/export.h"
#include "mwe/json_io.h"
#include "mwe/service.h"

namespace mwe {

namespace {

constexpr const char *kCatalogEnv = "MWE_CATALOG";

struct CommonOptions {
  std::string catalog_path;
  std::string format;
};

struct CorpusOptions {
  std::vector<std::string> corpus;
  std::string cache;
  std::string split = "files";
  bool no_case_fold = false;
  bool no_yo = false;

  TokenizerConfig Config() const {
    TokenizerConfig c;
    c.case_fold = !no_case_fold;
    c.normalize_yo = !no_yo;
    return c;
  }
};

// Thrown to leave a command with a specific exit code after the message has
// been printed.
struct ExitWith {
  int code;
};

CriteriaCatalog LoadCatalog(const CommonOptions &common) {
  std::string path = common.catalog_path;
  if (path.empty()) {
    if (const char *env = std::getenv(kCatalogEnv)) path = env;
  }
  if (path.empty()) return CriteriaCatalog::Default();
  return CriteriaCatalog::LoadFile(path);
}

Dataset LoadInput(const std::string &input, const CommonOptions &common,
                  const CriteriaCatalog &catalog, std::ostream &err,
                  bool allow_drafts = false) {
  if (input == "sample") {
    auto result = LoadDataset(SampleDatasetJson(), DatasetFormat::kStructured,
                              catalog, {allow_drafts});
    if (!result.ok()) {
      for (const auto &e : result.errors) err << e.ToString() << "\n";
      throw ExitWith{kExitFailure};
    }
    return std::move(result.dataset);
  }
  std::optional<DatasetFormat> format =
      common.format.empty() ? FormatForPath(input) : ParseFormat(common.format);
  if (!format) {
    err << "cannot tell the format of '" << input
        << "'; pass --format tsv|json\n";
    throw ExitWith{kExitUsage};
  }
  auto result = LoadDataset(ReadFile(input), *format, catalog, {allow_drafts});
  if (!result.ok()) {
    for (const auto &e : result.errors) err << e.ToString() << "\n";
    err << result.errors.size() << " error(s) in " << input << "\n";
    throw ExitWith{kExitFailure};
  }
  return std::move(result.dataset);
}

CorpusIndex LoadCorpus(const CorpusOptions &options) {
  TokenizerConfig config = options.Config();
  if (!options.cache.empty() && options.corpus.empty()) {
    auto index = CorpusIndex::LoadCache(options.cache, config);
    if (!index) {
      throw Error(ErrorCode::kParseError,
                  "index cache " + options.cache +
                      " was built with another version or tokenizer "
                      "configuration; rebuild it with corpus-index");
    }
    return std::move(*index);
  }
  if (options.corpus.empty()) {
    throw Error(ErrorCode::kNoCorpus, "pass --corpus files or --cache");
  }
  std::vector<std::string> documents;
  for (const auto &path : options.corpus) {
    std::string text = ReadFile(path);
    if (options.split == "blank-lines") {
      for (auto &doc : SplitBlankLineDocuments(text)) documents.push_back(std::move(doc));
    } else {
      documents.push_back(std::move(text));
    }
  }
  return CorpusIndex::Build(documents, config);
}

void AddCorpusFlags(CLI::App *cmd, CorpusOptions &options, bool require_source) {
  auto *corpus = cmd->add_option("--corpus", options.corpus,
                                 "Corpus text files");
  auto *cache = cmd->add_option("--cache", options.cache, "Index cache file");
  if (require_source) {
    auto *group = cmd->add_option_group("source", "Exactly one of --corpus or --cache");
    group->add_option(corpus);
    group->add_option(cache);
    group->require_option(1);
  }
  cmd->add_option("--split", options.split,
                  "files: one document per file; blank-lines: documents "
                  "separated by blank lines")
      ->check(CLI::IsMember({"files", "blank-lines"}));
  cmd->add_flag("--no-case-fold", options.no_case_fold, "Keep letter case");
  cmd->add_flag("--no-yo", options.no_yo, "Keep ё distinct from е");
}

void AddAxesFlags(CLI::App *cmd, std::string &axes, std::string &held_out) {
  cmd->add_option("--axes", axes, "Three cube axes, e.g. L,G,O")
      ->default_val("L,G,O");
  cmd->add_option("--held-out", held_out, "Group shown as color")
      ->default_val("R");
}

void PrintKwic(const QueryEvidence &q, std::ostream &out) {
  out << "query \"" << q.query << "\": raw " << q.raw_hits << ", effective "
      << q.effective_hits << "\n";
  for (const auto &line : q.kwic) {
    out << "  [" << line.document << ":" << line.offset << "] " << line.left
        << " [[" << line.match << "]] " << line.right << "\n";
  }
}

}  // namespace

int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"Idiomaticity criteria workbench for multi-word expressions",
               "mwe"};
  app.require_subcommand(1, 1);
  app.allow_extras(false);

  CommonOptions common;
  app.add_option("--catalog", common.catalog_path,
                 std::string("Criteria catalog file (default: $") +
                     kCatalogEnv + " or the built-in catalog)");

  std::string input, output, axes, held_out, out_dir, targets, record_id,
      check, query_text, host = "127.0.0.1", autosave;
  int port = 8080;
  int window = 5;
  int limit = 50;
  bool read_only = false;
  CorpusOptions corpus;

  auto add_input = [&](CLI::App *cmd) {
    cmd->add_option("input", input,
                    "Dataset file (.tsv or .json), or 'sample'")
        ->required();
    cmd->add_option("--format", common.format, "tsv or json")
        ->check(CLI::IsMember({"tsv", "json", "tabular", "structured"}));
  };

  auto *validate = app.add_subcommand("validate", "Validate a dataset");
  add_input(validate);

  auto *score = app.add_subcommand("score", "Total and group scores per record");
  add_input(score);
  score->add_option("--output", output, "Write a score table (TSV)");

  auto *analyze = app.add_subcommand("analyze", "Dataset statistics");
  add_input(analyze);
  AddAxesFlags(analyze, axes, held_out);
  analyze->add_option("--output", output, "Write the JSON analysis report");

  auto *cube = app.add_subcommand("cube", "3D cube aggregation");
  add_input(cube);
  AddAxesFlags(cube, axes, held_out);
  cube->add_option("--output", output, "Write the cube table (TSV)");

  auto *corpus_index = app.add_subcommand("corpus-index",
                                          "Build a corpus index cache");
  corpus_index->add_option("files", corpus.corpus, "Corpus text files")
      ->required();
  corpus_index->add_option("--cache", corpus.cache, "Cache file to write")
      ->required();
  corpus_index->add_option("--split", corpus.split, "files or blank-lines")
      ->check(CLI::IsMember({"files", "blank-lines"}));
  corpus_index->add_flag("--no-case-fold", corpus.no_case_fold,
                         "Keep letter case");
  corpus_index->add_flag("--no-yo", corpus.no_yo, "Keep ё distinct from е");

  auto *corpus_query = app.add_subcommand("corpus-query",
                                          "Run a wildcard query");
  corpus_query->add_option("query", query_text, "e.g. \"белый * гриб\"")
      ->required();
  AddCorpusFlags(corpus_query, corpus, true);
  corpus_query->add_option("--window", window, "KWIC tokens on each side")
      ->check(CLI::NonNegativeNumber);
  corpus_query->add_option("--limit", limit, "Maximum KWIC lines")
      ->check(CLI::NonNegativeNumber);

  auto *corpus_check = app.add_subcommand("corpus-check",
                                          "Corpus evidence for one record");
  add_input(corpus_check);
  corpus_check->add_option("--id", record_id, "Record id")->required();
  corpus_check->add_option("--check", check, "insertion or inflection")
      ->required()
      ->check(CLI::IsMember({"insertion", "inflection"}));
  AddCorpusFlags(corpus_check, corpus, true);
  corpus_check->add_option("--window", window, "KWIC tokens on each side")
      ->check(CLI::NonNegativeNumber);
  corpus_check->add_option("--output", output, "Write the JSON report");

  auto *export_cmd = app.add_subcommand("export",
                                        "Write report tables, JSON and SVG");
  add_input(export_cmd);
  AddAxesFlags(export_cmd, axes, held_out);
  export_cmd->add_option("--out-dir", out_dir, "Output directory")->required();
  export_cmd->add_option("--targets", targets, "Subset of tables,json,svg")
      ->default_val("tables,json,svg")
      ->check(CLI::Validator(
          [](std::string &value) -> std::string {
            try {
              ExportTargets::Parse(value);
            } catch (const Error &e) {
              return e.what();
            }
            return "";
          },
          "TARGETS"));

  auto *serve = app.add_subcommand("serve", "Start the HTTP annotation service");
  add_input(serve);
  serve->add_option("--host", host, "Bind address");
  serve->add_option("--port", port, "Port")->check(CLI::Range(0, 65535));
  serve->add_option("--autosave", autosave,
                    "Structured file rewritten after each accepted edit");
  serve->add_flag("--read-only", read_only, "Reject annotation edits");
  AddCorpusFlags(serve, corpus, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const CriteriaCatalog catalog = LoadCatalog(common);

    if (*validate) {
      Dataset d = LoadInput(input, common, catalog, err);
      out << d.records.size() << " records valid\n";
      return kExitOk;
    }

    if (*score) {
      Dataset d = LoadInput(input, common, catalog, err);
      std::ostringstream table;
      table << "id\ttotal\tL\tG\tO\tR\n";
      for (const auto &r : d.records) {
        GroupVector v = ToGroupVector(r.annotation, catalog);
        out << r.id << "\t" << TotalScore(r.annotation) << "\t"
            << v.ToString() << "\n";
        table << r.id << '\t' << v.total() << '\t' << v.sums[0] << '\t'
              << v.sums[1] << '\t' << v.sums[2] << '\t' << v.sums[3] << '\n';
      }
      if (!output.empty()) WriteFile(output, table.str());
      return kExitOk;
    }

    if (*analyze || *cube || *export_cmd) {
      CubeAxes cube_axes;
      try {
        cube_axes = CubeAxes::Parse(axes, held_out);
      } catch (const Error &e) {
        err << ErrorCodeName(e.code()) << ": " << e.what() << "\n";
        return kExitUsage;
      }
      Dataset d = LoadInput(input, common, catalog, err);
      AnalysisReport report = BuildReport(d.records, catalog, cube_axes);

      if (*analyze) {
        const auto &h = report.histogram;
        out << "records: " << report.n << "\n";
        out << "score histogram:";
        for (const auto &[s, n] : h.counts) out << " " << s << ":" << n;
        out << "\n";
        out << "median " << h.median.ToString() << " ("
            << h.below_median << " below), range midpoint "
            << h.range_midpoint.ToString() << " (" << h.below_range_midpoint
            << " below)\n";
        out << "group totals:";
        for (Group g : kAllGroups) {
          out << " " << GroupLetter(g) << "="
              << report.group_totals.totals[GroupIndex(g)];
        }
        out << " (grand " << report.group_totals.grand_total << ")\n";
        out << "unique vectors: " << report.unique_vectors.distinct << "/"
            << report.unique_vectors.n << "\n";
        out << "cube points (" << cube_axes.AxesString() << " | "
            << GroupLetter(cube_axes.held_out) << "): " << report.cube.size()
            << "\n";
        if (!output.empty()) WriteFile(output, ReportToJsonText(report, catalog));
        return kExitOk;
      }
      if (*cube) {
        for (const auto &p : report.cube) {
          out << "key=(" << p.key[0] << "," << p.key[1] << "," << p.key[2]
              << ") count=" << p.count
              << " mean=" << FormatDouble(p.held_out_mean.ToDouble())
              << " color=" << FormatDouble(p.color_scalar.ToDouble())
              << " members=";
          for (size_t i = 0; i < p.member_ids.size(); ++i) {
            out << (i ? "," : "") << p.member_ids[i];
          }
          out << "\n";
        }
        if (!output.empty()) WriteFile(output, CubeTable(report));
        return kExitOk;
      }
      for (const auto &path :
           ExportReport(report, catalog, out_dir, ExportTargets::Parse(targets))) {
        out << "wrote " << path << "\n";
      }
      return kExitOk;
    }

    if (*corpus_index) {
      CorpusOptions build = corpus;
      std::string cache_path = build.cache;
      build.cache.clear();
      CorpusIndex index = LoadCorpus(build);
      index.SaveCache(cache_path);
      out << "indexed " << index.token_count() << " tokens in "
          << index.document_count() << " documents, "
          << index.vocabulary().size() << " distinct";
      if (index.invalid_bytes() > 0) {
        out << ", skipped " << index.invalid_bytes() << " invalid bytes";
      }
      out << "\n";
      return kExitOk;
    }

    if (*corpus_query) {
      CorpusIndex index = LoadCorpus(corpus);
      WildcardQuery q = ParseQuery(query_text, index.config());
      auto hits = FindMatches(index, q);
      QueryEvidence ev;
      ev.query = q.ToString();
      ev.raw_hits = static_cast<int>(hits.size());
      ev.effective_hits = EffectiveHits(ev.raw_hits);
      for (const auto &hit : hits) {
        if (static_cast<int>(ev.kwic.size()) >= limit) break;
        std::uint32_t begin = index.document_begin(hit.document);
        std::uint32_t end = index.document_end(hit.document);
        std::uint32_t start = begin + hit.offset;
        std::uint32_t stop = start + static_cast<std::uint32_t>(hit.tokens.size());
        KwicLine line{hit.document, hit.offset, "", "", ""};
        for (std::uint32_t p = start - std::min<std::uint32_t>(window, start - begin);
             p < start; ++p) {
          line.left += (line.left.empty() ? "" : " ") + index.token(p);
        }
        for (const auto &t : hit.tokens) {
          line.match += (line.match.empty() ? "" : " ") + t;
        }
        for (std::uint32_t p = stop; p < std::min<std::uint32_t>(end, stop + window); ++p) {
          line.right += (line.right.empty() ? "" : " ") + index.token(p);
        }
        ev.kwic.push_back(std::move(line));
      }
      PrintKwic(ev, out);
      return kExitOk;
    }

    if (*corpus_check) {
      Dataset d = LoadInput(input, common, catalog, err, true);
      AnnotationSession session(std::move(d), catalog,
                                {"", true, {1, window, 50}});
      session.SetCorpus(std::make_shared<CorpusIndex>(LoadCorpus(corpus)));
      EvidenceReport report = session.RunCorpusCheck(record_id, check);
      for (const auto &q : report.queries) PrintKwic(q, out);
      for (const auto &r : report.realizations) {
        out << "realization \"" << r.surface << "\" x" << r.raw_count
            << (r.canonical ? " (canonical)" : "") << "\n";
      }
      for (const auto &r : report.discarded) {
        out << "occasional \"" << r.surface << "\" x" << r.raw_count << "\n";
      }
      for (const auto &s : report.suggestions) {
        out << "criterion " << s.criterion.Roman() << ": "
            << (s.suggestion ? SuggestionName(*s.suggestion)
                             : ErrorCodeName(*s.error))
            << " (" << s.note << ")\n";
      }
      if (!output.empty()) WriteFile(output, EvidenceToJson(report).dump(2) + "\n");
      return kExitOk;
    }

    if (*serve) {
      Dataset d = LoadInput(input, common, catalog, err, true);
      ServiceOptions options;
      options.autosave_path = autosave;
      options.read_only = read_only;
      AnnotationSession session(std::move(d), catalog, options);
      if (!corpus.corpus.empty() || !corpus.cache.empty()) {
        session.SetCorpus(std::make_shared<CorpusIndex>(LoadCorpus(corpus)));
      }
      HttpServer server(session);
      if (!server.Bind(host, port)) {
        err << "cannot bind " << host << ":" << port << "\n";
        return kExitFailure;
      }
      out << "listening on http://" << host << ":" << port << "\n" << std::flush;
      server.ListenAfterBind();
      return kExitOk;
    }
  } catch (const ExitWith &e) {
    return e.code;
  } catch (const Error &e) {
    err << ErrorCodeName(e.code()) << ": " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace mwe
