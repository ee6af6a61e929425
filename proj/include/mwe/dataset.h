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

#ifndef MWE_DATASET_H_
#define MWE_DATASET_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mwe/criteria.h"

namespace mwe {

struct Dataset {
  std::string catalog_version = "default-16";
  std::string language = "ru";
  std::string provenance;
  std::vector<MweRecord> records;

  const MweRecord *Find(std::string_view id) const;
  MweRecord *Find(std::string_view id);

  friend bool operator==(const Dataset &, const Dataset &) = default;
};

// Tabular: UTF-8, tab-separated, mandatory header, one row per record with
// columns id, surface, gloss, source, pos_pattern, is_sentence, headword,
// phrase_structure, c01..c16, notes. Tabs, newlines and backslashes inside
// fields are written as \t, \n, \r and \\. Per-cell notes, token stems and
// the dataset-level fields exist only in the structured format.
//
// Structured: a JSON object {format, format_version, catalog_version,
// language, provenance, records: [...]}.
enum class DatasetFormat { kTabular, kStructured };

// "tsv" / "tabular" and "json" / "structured".
std::optional<DatasetFormat> ParseFormat(std::string_view tag);
std::string_view FormatName(DatasetFormat format);

// By file extension: .tsv and .tab are tabular, .json structured.
std::optional<DatasetFormat> FormatForPath(std::string_view path);

enum class LoadErrorKind { kParseError, kValidationError, kDuplicateId };

struct LoadError {
  LoadErrorKind kind;
  int line = 0;  // 1-based; 0 when unknown
  std::string record_id;
  std::optional<Rule> rule;
  std::string message;

  std::string ToString() const;
};

struct LoadOptions {
  // Keep records that fail validation instead of rejecting the file. Parse
  // errors and duplicate ids are still fatal.
  bool allow_drafts = false;
};

struct LoadResult {
  // Empty whenever `errors` is non-empty.
  Dataset dataset;
  std::vector<LoadError> errors;

  bool ok() const { return errors.empty(); }
};

// Records come back ordered by id. Every record is checked with
// ValidateRecord; no rule is duplicated here.
LoadResult LoadDataset(std::string_view bytes, DatasetFormat format,
                       const CriteriaCatalog &catalog,
                       const LoadOptions &options = {});

// Canonical serialization: fixed column/key order, records ordered by id.
std::string SaveDataset(const Dataset &dataset, DatasetFormat format);

// The bundled six-record sample. Throws if the embedded copy is broken.
const Dataset &SampleDataset();

// The embedded sample file, byte for byte.
std::string_view SampleDatasetJson();

std::string ReadFile(const std::string &path);

// Throws Error(kUnwritableTarget).
void WriteFile(const std::string &path, std::string_view content);

}  // namespace mwe

#endif  // MWE_DATASET_H_
