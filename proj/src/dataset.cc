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

#include "mwe/dataset.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mwe/error.h"
#include "mwe/json_io.h"

namespace mwe {

namespace internal {
extern const std::string_view kSampleDatasetJson;
}  // namespace internal

namespace {

std::optional<std::string> OptionalString(const Json &obj,
                                          const char *key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  return it->get<std::string>();
}

constexpr std::string_view kStructuredFormat = "mwe-dataset";
constexpr int kStructuredVersion = 1;

std::vector<std::string> TabularColumns() {
  std::vector<std::string> cols = {"id",          "surface",    "gloss",
                                   "source",      "pos_pattern", "is_sentence",
                                   "headword",    "phrase_structure"};
  for (int i = 1; i <= kNumCriteria; ++i) cols.push_back(Criterion(i).Code());
  cols.push_back("notes");
  return cols;
}

std::string Escape(std::string_view field) {
  std::string out;
  for (char c : field) {
    switch (c) {
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\\': out += "\\\\"; break;
      default: out += c;
    }
  }
  return out;
}

// Returns false on a dangling or unknown escape.
bool Unescape(std::string_view field, std::string &out) {
  out.clear();
  for (size_t i = 0; i < field.size(); ++i) {
    if (field[i] != '\\') {
      out += field[i];
      continue;
    }
    if (++i == field.size()) return false;
    switch (field[i]) {
      case 't': out += '\t'; break;
      case 'n': out += '\n'; break;
      case 'r': out += '\r'; break;
      case '\\': out += '\\'; break;
      default: return false;
    }
  }
  return true;
}

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t pos = 0;
  while (true) {
    size_t tab = line.find('\t', pos);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(pos));
      return fields;
    }
    fields.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
}

std::optional<std::string> OptionalField(std::string value) {
  if (value.empty()) return std::nullopt;
  return value;
}

struct ParsedRecord {
  MweRecord record;
  int line = 0;
};

void ParseTabular(std::string_view bytes, std::vector<ParsedRecord> &out,
                  std::vector<LoadError> &errors) {
  const auto columns = TabularColumns();
  auto parse_error = [&](int line, std::string id, std::string message) {
    errors.push_back({LoadErrorKind::kParseError, line, std::move(id),
                      std::nullopt, std::move(message)});
  };

  std::vector<int> slot;  // file column -> canonical column
  bool have_header = false;
  int line_no = 0;
  size_t pos = 0;
  while (pos < bytes.size()) {
    size_t end = bytes.find('\n', pos);
    if (end == std::string_view::npos) end = bytes.size();
    std::string_view line = bytes.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;

    auto fields = SplitTabs(line);
    if (!have_header) {
      have_header = true;
      std::set<int> seen;
      for (auto name : fields) {
        auto it = std::find(columns.begin(), columns.end(), name);
        if (it == columns.end()) {
          parse_error(line_no, "", "unknown column '" + std::string(name) + "'");
          return;
        }
        int index = static_cast<int>(it - columns.begin());
        if (!seen.insert(index).second) {
          parse_error(line_no, "", "duplicate column '" + std::string(name) + "'");
          return;
        }
        slot.push_back(index);
      }
      if (seen.size() != columns.size()) {
        parse_error(line_no, "", "header is missing required columns");
        return;
      }
      continue;
    }

    if (fields.size() != slot.size()) {
      parse_error(line_no, "",
                  "expected " + std::to_string(slot.size()) + " fields, got " +
                      std::to_string(fields.size()));
      continue;
    }
    std::vector<std::string> values(columns.size());
    bool ok = true;
    for (size_t i = 0; i < fields.size(); ++i) {
      if (!Unescape(fields[i], values[slot[i]])) {
        parse_error(line_no, "", "bad escape in column '" +
                                     columns[slot[i]] + "'");
        ok = false;
      }
    }
    if (!ok) continue;

    ParsedRecord parsed;
    parsed.line = line_no;
    MweRecord &r = parsed.record;
    r.id = values[0];
    r.surface = values[1];
    r.gloss = OptionalField(values[2]);
    r.source = OptionalField(values[3]);
    r.features.pos_pattern = values[4];
    if (values[5] == "1" || values[5] == "0") {
      r.features.is_sentence = values[5] == "1";
    } else {
      parse_error(line_no, r.id, "is_sentence must be 0 or 1");
      ok = false;
    }
    r.features.headword = OptionalField(values[6]);
    r.features.phrase_structure = values[7];
    for (int i = 0; i < kNumCriteria; ++i) {
      const std::string &cell = values[8 + i];
      CriterionId id = Criterion(i + 1);
      if (cell == "0" || cell == "1") {
        r.annotation.set_cell(id, cell == "1" ? 1 : 0);
      } else if (!cell.empty()) {
        parse_error(line_no, r.id,
                    "column " + id.Code() + " must be 0 or 1, got '" + cell +
                        "'");
        ok = false;
      }
    }
    r.notes = values[8 + kNumCriteria];
    if (r.id.empty()) {
      parse_error(line_no, "", "empty id");
      ok = false;
    }
    if (ok) out.push_back(std::move(parsed));
  }
  if (!have_header) parse_error(1, "", "missing header row");
}

int LineOfOffset(std::string_view bytes, size_t offset) {
  offset = std::min(offset, bytes.size());
  return 1 + static_cast<int>(
                 std::count(bytes.begin(), bytes.begin() + offset, '\n'));
}

void ParseStructured(std::string_view bytes, Dataset &meta,
                     std::vector<ParsedRecord> &out,
                     std::vector<LoadError> &errors) {
  Json doc;
  try {
    doc = Json::parse(bytes);
  } catch (const nlohmann::json::parse_error &e) {
    errors.push_back({LoadErrorKind::kParseError,
                      LineOfOffset(bytes, e.byte > 0 ? e.byte - 1 : 0), "",
                      std::nullopt, e.what()});
    return;
  }
  try {
    if (doc.value("format", std::string()) != kStructuredFormat) {
      throw std::invalid_argument("not an mwe-dataset file");
    }
    if (doc.value("format_version", 0) != kStructuredVersion) {
      throw std::invalid_argument("unsupported format_version");
    }
    meta.catalog_version = doc.at("catalog_version").get<std::string>();
    meta.language = doc.value("language", std::string());
    meta.provenance = doc.value("provenance", std::string());
  } catch (const std::exception &e) {
    errors.push_back(
        {LoadErrorKind::kParseError, 1, "", std::nullopt, e.what()});
    return;
  }
  if (!doc.contains("records") || !doc["records"].is_array()) {
    errors.push_back({LoadErrorKind::kParseError, 1, "", std::nullopt,
                      "missing records array"});
    return;
  }
  int index = 0;
  for (const auto &j : doc["records"]) {
    ++index;
    std::string id = j.is_object() ? j.value("id", std::string()) : "";
    try {
      ParsedRecord parsed{RecordFromJson(j), 0};
      if (parsed.record.id.empty()) throw std::invalid_argument("empty id");
      out.push_back(std::move(parsed));
    } catch (const std::exception &e) {
      errors.push_back({LoadErrorKind::kParseError, 0,
                        id.empty() ? "#" + std::to_string(index) : id,
                        std::nullopt, e.what()});
    }
  }
}

std::vector<const MweRecord *> SortedById(const Dataset &dataset) {
  std::vector<const MweRecord *> sorted;
  for (const auto &r : dataset.records) sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const MweRecord *a, const MweRecord *b) {
                     return a->id < b->id;
                   });
  return sorted;
}

}  // namespace

AnnotationVector AnnotationFromJson(const Json &a) {
  AnnotationVector annotation;
  if (!a.is_object()) throw std::invalid_argument("annotation must be an object");
  const auto &cells = a.at("cells");
  if (!cells.is_array() || cells.size() != kNumCriteria) {
    throw std::invalid_argument("annotation.cells must hold 16 entries");
  }
  for (int i = 0; i < kNumCriteria; ++i) {
    if (cells[i].is_null()) continue;
    if (!cells[i].is_number_integer()) {
      throw std::invalid_argument("cells must be integers or null");
    }
    annotation.set_cell(Criterion(i + 1), cells[i].get<int>());
  }
  if (auto notes = a.find("notes"); notes != a.end()) {
    for (const auto &[key, value] : notes->items()) {
      auto id = CriterionId::Parse(key);
      if (!id) throw std::invalid_argument("unknown criterion '" + key + "'");
      annotation.set_note(*id, value.get<std::string>());
    }
  }
  return annotation;
}

MweRecord RecordFromJson(const Json &j) {
  MweRecord r;
  r.id = j.at("id").get<std::string>();
  r.surface = j.at("surface").get<std::string>();
  r.gloss = OptionalString(j, "gloss");
  r.source = OptionalString(j, "source");
  r.notes = j.value("notes", std::string());

  const auto &f = j.at("features");
  r.features.pos_pattern = f.at("pos_pattern").get<std::string>();
  r.features.is_sentence = f.at("is_sentence").get<bool>();
  r.features.headword = OptionalString(f, "headword");
  r.features.phrase_structure = f.at("phrase_structure").get<std::string>();

  r.annotation = AnnotationFromJson(j.at("annotation"));
  if (auto stems = j.find("token_stems"); stems != j.end()) {
    for (const auto &pair : *stems) {
      if (!pair.is_array() || pair.size() != 2) {
        throw std::invalid_argument("token_stems entries are [token, stem]");
      }
      r.token_stems.push_back(
          {pair[0].get<std::string>(), pair[1].get<std::string>()});
    }
  }
  return r;
}

Json RecordToJson(const MweRecord &r) {
  Json j;
  j["id"] = r.id;
  j["surface"] = r.surface;
  j["gloss"] = r.gloss ? Json(*r.gloss) : Json(nullptr);
  j["source"] = r.source ? Json(*r.source) : Json(nullptr);
  j["notes"] = r.notes;
  Json f;
  f["pos_pattern"] = r.features.pos_pattern;
  f["is_sentence"] = r.features.is_sentence;
  f["headword"] = r.features.headword ? Json(*r.features.headword)
                                      : Json(nullptr);
  f["phrase_structure"] = r.features.phrase_structure;
  j["features"] = std::move(f);

  Json cells = Json::array();
  Json notes = Json::object();
  for (int i = 0; i < kNumCriteria; ++i) {
    CriterionId id = Criterion(i + 1);
    const auto &cell = r.annotation.cell(id);
    cells.push_back(cell ? Json(*cell) : Json(nullptr));
    if (!r.annotation.note(id).empty()) notes[id.Code()] = r.annotation.note(id);
  }
  j["annotation"] = {{"cells", std::move(cells)}, {"notes", std::move(notes)}};
  Json stems = Json::array();
  for (const auto &ts : r.token_stems) stems.push_back({ts.token, ts.stem});
  j["token_stems"] = std::move(stems);
  return j;
}

const MweRecord *Dataset::Find(std::string_view id) const {
  for (const auto &r : records) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

MweRecord *Dataset::Find(std::string_view id) {
  for (auto &r : records) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

std::optional<DatasetFormat> ParseFormat(std::string_view tag) {
  if (tag == "tsv" || tag == "tabular") return DatasetFormat::kTabular;
  if (tag == "json" || tag == "structured") return DatasetFormat::kStructured;
  return std::nullopt;
}

std::string_view FormatName(DatasetFormat format) {
  return format == DatasetFormat::kTabular ? "tsv" : "json";
}

std::optional<DatasetFormat> FormatForPath(std::string_view path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() &&
           path.substr(path.size() - suffix.size()) == suffix;
  };
  if (ends_with(".tsv") || ends_with(".tab")) return DatasetFormat::kTabular;
  if (ends_with(".json")) return DatasetFormat::kStructured;
  return std::nullopt;
}

std::string LoadError::ToString() const {
  std::string out;
  switch (kind) {
    case LoadErrorKind::kParseError: out = "ParseError"; break;
    case LoadErrorKind::kValidationError: out = "ValidationError"; break;
    case LoadErrorKind::kDuplicateId: out = "DuplicateId"; break;
  }
  if (rule) out += "(" + std::string(RuleName(*rule)) + ")";
  if (line > 0) out += " line " + std::to_string(line);
  if (!record_id.empty()) out += " [" + record_id + "]";
  return out + ": " + message;
}

LoadResult LoadDataset(std::string_view bytes, DatasetFormat format,
                       const CriteriaCatalog &catalog,
                       const LoadOptions &options) {
  LoadResult result;
  std::vector<ParsedRecord> parsed;
  if (format == DatasetFormat::kTabular) {
    ParseTabular(bytes, parsed, result.errors);
  } else {
    ParseStructured(bytes, result.dataset, parsed, result.errors);
  }

  std::set<std::string> ids;
  for (const auto &p : parsed) {
    const MweRecord &r = p.record;
    if (!ids.insert(r.id).second) {
      result.errors.push_back({LoadErrorKind::kDuplicateId, p.line, r.id,
                               std::nullopt, "duplicate record id"});
      continue;
    }
    if (options.allow_drafts) continue;
    for (const auto &v : ValidateRecord(r, catalog).violations) {
      result.errors.push_back({LoadErrorKind::kValidationError, p.line, r.id,
                               v.rule, v.message});
    }
  }

  if (!result.errors.empty()) {
    result.dataset = Dataset();
    return result;
  }
  for (auto &p : parsed) result.dataset.records.push_back(std::move(p.record));
  std::stable_sort(result.dataset.records.begin(),
                   result.dataset.records.end(),
                   [](const MweRecord &a, const MweRecord &b) {
                     return a.id < b.id;
                   });
  return result;
}

std::string SaveDataset(const Dataset &dataset, DatasetFormat format) {
  if (format == DatasetFormat::kTabular) {
    std::string out;
    const auto columns = TabularColumns();
    for (size_t i = 0; i < columns.size(); ++i) {
      if (i) out += '\t';
      out += columns[i];
    }
    out += '\n';
    for (const MweRecord *r : SortedById(dataset)) {
      std::vector<std::string> f = {
          r->id,
          r->surface,
          r->gloss.value_or(""),
          r->source.value_or(""),
          r->features.pos_pattern,
          r->features.is_sentence ? "1" : "0",
          r->features.headword.value_or(""),
          r->features.phrase_structure};
      for (const auto &cell : r->annotation.cells()) {
        f.push_back(cell ? std::to_string(*cell) : "");
      }
      f.push_back(r->notes);
      for (size_t i = 0; i < f.size(); ++i) {
        if (i) out += '\t';
        out += Escape(f[i]);
      }
      out += '\n';
    }
    return out;
  }

  Json doc;
  doc["format"] = kStructuredFormat;
  doc["format_version"] = kStructuredVersion;
  doc["catalog_version"] = dataset.catalog_version;
  doc["language"] = dataset.language;
  doc["provenance"] = dataset.provenance;
  Json records = Json::array();
  for (const MweRecord *r : SortedById(dataset)) records.push_back(RecordToJson(*r));
  doc["records"] = std::move(records);
  return doc.dump(2) + "\n";
}

std::string_view SampleDatasetJson() { return internal::kSampleDatasetJson; }

const Dataset &SampleDataset() {
  static const Dataset *sample = [] {
    auto result = LoadDataset(SampleDatasetJson(), DatasetFormat::kStructured,
                              CriteriaCatalog::Default());
    if (!result.ok()) {
      throw Error(ErrorCode::kParseError,
                  "bundled sample is invalid: " + result.errors[0].ToString());
    }
    return new Dataset(std::move(result.dataset));
  }();
  return *sample;
}

std::string ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void WriteFile(const std::string &path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kUnwritableTarget, "cannot write " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorCode::kUnwritableTarget, "failed writing " + path);
}

}  // namespace mwe
