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

#include "mwe/service.h"

#include <algorithm>
#include <filesystem>
#include <mutex>

#include "httplib.h"
#include "mwe/error.h"

namespace mwe {

namespace {

std::vector<std::string_view> SplitPath(std::string_view path) {
  std::vector<std::string_view> parts;
  size_t pos = 0;
  while (pos < path.size()) {
    size_t slash = path.find('/', pos);
    if (slash == std::string_view::npos) slash = path.size();
    if (slash > pos) parts.push_back(path.substr(pos, slash - pos));
    pos = slash + 1;
  }
  return parts;
}

Json ErrorBody(std::string_view error, const std::string &message) {
  return {{"error", error}, {"message", message}};
}

Json GroupVectorJson(const std::optional<GroupVector> &v) {
  if (!v) return nullptr;
  return Json(v->sums);
}

std::string Param(const std::multimap<std::string, std::string> &params,
                  const std::string &key, const std::string &fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

}  // namespace

int HttpStatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownId: return 404;
    case ErrorCode::kReadOnlyMode: return 409;
    case ErrorCode::kNoCorpus: return 409;
    case ErrorCode::kNoDataset: return 409;
    case ErrorCode::kMissingStems:
    case ErrorCode::kTooShort:
    case ErrorCode::kEmptyDataset: return 422;
    case ErrorCode::kAxisOverlap:
    case ErrorCode::kParseError: return 400;
    default: return 500;
  }
}

Json RecordViewJson(const MweRecord &record, const CriteriaCatalog &catalog) {
  ValidationResult validation = ValidateRecord(record, catalog);
  Json j;
  j["record"] = RecordToJson(record);
  j["completion"] = validation.ok() ? "complete" : "draft";
  j["validation"] = ValidationToJson(validation);
  if (validation.ok()) {
    j["total"] = TotalScore(record.annotation);
    j["group_vector"] = ToGroupVector(record.annotation, catalog).sums;
  } else {
    j["total"] = nullptr;
    j["group_vector"] = nullptr;
  }
  Json applicable = Json::array();
  for (auto id : ApplicabilityMask(record.features, catalog).ids()) {
    applicable.push_back(id.Code());
  }
  j["applicable"] = std::move(applicable);
  return j;
}

AnnotationSession::AnnotationSession(CriteriaCatalog catalog,
                                     ServiceOptions options)
    : catalog_(std::move(catalog)), options_(std::move(options)) {}

AnnotationSession::AnnotationSession(Dataset dataset, CriteriaCatalog catalog,
                                     ServiceOptions options)
    : dataset_(std::move(dataset)),
      catalog_(std::move(catalog)),
      options_(std::move(options)) {}

void AnnotationSession::SetCorpus(std::shared_ptr<const CorpusIndex> corpus) {
  std::unique_lock lock(mutex_);
  corpus_ = std::move(corpus);
}

bool AnnotationSession::dirty() const {
  std::shared_lock lock(mutex_);
  return dirty_;
}

Dataset AnnotationSession::Snapshot() const {
  std::shared_lock lock(mutex_);
  RequireDataset();
  return *dataset_;
}

void AnnotationSession::RequireDataset() const {
  if (!dataset_) throw Error(ErrorCode::kNoDataset, "no dataset loaded");
}

const MweRecord &AnnotationSession::FindLocked(std::string_view id) const {
  RequireDataset();
  const MweRecord *r = dataset_->Find(id);
  if (!r) throw Error(ErrorCode::kUnknownId, "unknown record '" + std::string(id) + "'");
  return *r;
}

std::vector<RecordSummary> AnnotationSession::ListRecords() const {
  std::shared_lock lock(mutex_);
  RequireDataset();
  std::vector<RecordSummary> out;
  for (const auto &r : dataset_->records) {
    RecordSummary s;
    s.id = r.id;
    s.surface = r.surface;
    s.complete = ValidateRecord(r, catalog_).ok();
    if (s.complete) {
      s.total = TotalScore(r.annotation);
      s.group_vector = ToGroupVector(r.annotation, catalog_);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(),
            [](const RecordSummary &a, const RecordSummary &b) {
              return a.id < b.id;
            });
  return out;
}

MweRecord AnnotationSession::GetRecord(std::string_view id) const {
  std::shared_lock lock(mutex_);
  return FindLocked(id);
}

PutOutcome AnnotationSession::PutAnnotation(std::string_view id,
                                            const AnnotationVector &draft,
                                            bool replace_notes) {
  std::unique_lock lock(mutex_);
  RequireDataset();
  MweRecord *record = dataset_->Find(id);
  if (!record) {
    throw Error(ErrorCode::kUnknownId, "unknown record '" + std::string(id) + "'");
  }
  if (options_.read_only) {
    throw Error(ErrorCode::kReadOnlyMode, "session is read-only");
  }

  AnnotationVector next = draft;
  if (!replace_notes) {
    for (int i = 0; i < kNumCriteria; ++i) {
      next.set_note(Criterion(i + 1), record->annotation.note(Criterion(i + 1)));
    }
  }
  PutOutcome outcome;
  outcome.validation = ValidateAnnotation(next, record->features, catalog_);
  outcome.accepted = outcome.validation.ok();
  record->annotation = std::move(next);
  dirty_ = true;
  if (outcome.accepted) {
    outcome.total = TotalScore(record->annotation);
    outcome.group_vector = ToGroupVector(record->annotation, catalog_);
    AutosaveLocked();
  }
  return outcome;
}

void AnnotationSession::AutosaveLocked() {
  if (options_.autosave_path.empty()) return;
  const std::string tmp = options_.autosave_path + ".tmp";
  WriteFile(tmp, SaveDataset(*dataset_, DatasetFormat::kStructured));
  std::error_code ec;
  std::filesystem::rename(tmp, options_.autosave_path, ec);
  if (ec) {
    throw Error(ErrorCode::kUnwritableTarget,
                "cannot replace " + options_.autosave_path);
  }
  dirty_ = false;
}

EvidenceReport AnnotationSession::RunCorpusCheck(std::string_view id,
                                                 std::string_view check) const {
  std::shared_lock lock(mutex_);
  const MweRecord &record = FindLocked(id);
  if (check != "insertion" && check != "inflection") {
    throw Error(ErrorCode::kParseError,
                "unknown check '" + std::string(check) + "'");
  }
  if (!corpus_) throw Error(ErrorCode::kNoCorpus, "no corpus index loaded");
  if (check == "inflection") {
    return CheckInflection(*corpus_, record, options_.evidence);
  }
  std::vector<std::string> tokens;
  if (!record.token_stems.empty()) {
    for (const auto &ts : record.token_stems) tokens.push_back(ts.token);
  } else {
    tokens = Tokenize(record.surface, corpus_->config()).tokens;
  }
  return CheckInsertion(*corpus_, tokens, options_.evidence);
}

AnalysisReport AnnotationSession::GetAnalysis(const CubeAxes &axes) const {
  axes.Validate();
  std::shared_lock lock(mutex_);
  RequireDataset();
  std::vector<MweRecord> complete;
  for (const auto &r : dataset_->records) {
    if (ValidateRecord(r, catalog_).ok()) complete.push_back(r);
  }
  return BuildReport(complete, catalog_, axes);
}

AnnotationSession::Response AnnotationSession::Handle(
    std::string_view method, std::string_view path,
    const std::multimap<std::string, std::string> &params,
    std::string_view body) {
  const auto parts = SplitPath(path);
  auto not_found = [&] {
    return Response{404, ErrorBody("NotFound", "no route " + std::string(path))};
  };
  auto bad_method = [&] {
    return Response{405, ErrorBody("MethodNotAllowed",
                                   std::string(method) + " " + std::string(path))};
  };

  try {
    if (parts.size() == 1 && parts[0] == "health") {
      if (method != "GET") return bad_method();
      return {200, {{"status", "ok"}}};
    }
    if (parts.size() == 1 && parts[0] == "catalog") {
      if (method != "GET") return bad_method();
      return {200, CatalogToJson(catalog_)};
    }
    if (parts.size() == 1 && parts[0] == "analysis") {
      if (method != "GET") return bad_method();
      CubeAxes axes = CubeAxes::Parse(Param(params, "axes", "L,G,O"),
                                      Param(params, "held_out", "R"));
      return {200, ReportToJson(GetAnalysis(axes), catalog_)};
    }
    if (parts.empty() || parts[0] != "records") return not_found();

    if (parts.size() == 1) {
      if (method != "GET") return bad_method();
      Json list = Json::array();
      for (const auto &s : ListRecords()) {
        list.push_back({{"id", s.id},
                        {"surface", s.surface},
                        {"completion", s.complete ? "complete" : "draft"},
                        {"total", s.total ? Json(*s.total) : Json(nullptr)},
                        {"group_vector", GroupVectorJson(s.group_vector)}});
      }
      return {200, {{"records", std::move(list)}}};
    }

    const std::string id(parts[1]);
    if (parts.size() == 2) {
      if (method != "GET") return bad_method();
      return {200, RecordViewJson(GetRecord(id), catalog_)};
    }
    if (parts.size() == 3 && parts[2] == "annotation") {
      if (method != "PUT") return bad_method();
      AnnotationVector draft;
      bool has_notes = false;
      try {
        Json j = Json::parse(body);
        if (j.is_object() && j.contains("annotation")) j = j["annotation"];
        draft = AnnotationFromJson(j);
        has_notes = j.contains("notes");
      } catch (const std::exception &e) {
        return {400, ErrorBody("Malformed", e.what())};
      }
      PutOutcome outcome = PutAnnotation(id, draft, has_notes);
      Json out;
      out["id"] = id;
      out["accepted"] = outcome.accepted;
      out["completion"] = outcome.accepted ? "complete" : "draft";
      out["total"] = outcome.total ? Json(*outcome.total) : Json(nullptr);
      out["group_vector"] = GroupVectorJson(outcome.group_vector);
      out["validation"] = ValidationToJson(outcome.validation);
      if (!outcome.accepted) {
        out["error"] = "ValidationError";
        out["violations"] = out["validation"]["violations"];
        return {422, std::move(out)};
      }
      return {200, std::move(out)};
    }
    if (parts.size() == 4 && parts[2] == "check") {
      if (method != "POST") return bad_method();
      EvidenceReport report = RunCorpusCheck(id, parts[3]);
      MweRecord record = GetRecord(id);
      Json cells = Json::array();
      for (const auto &c : record.annotation.cells()) {
        cells.push_back(c ? Json(*c) : Json(nullptr));
      }
      return {200, {{"id", id},
                    {"cells", std::move(cells)},
                    {"report", EvidenceToJson(report)}}};
    }
    return not_found();
  } catch (const Error &e) {
    return {HttpStatusFor(e.code()),
            ErrorBody(ErrorCodeName(e.code()), e.what())};
  }
}

struct HttpServer::Impl {
  httplib::Server server;
};

HttpServer::HttpServer(AnnotationSession &session)
    : impl_(std::make_unique<Impl>()) {
  auto handler = [&session](const httplib::Request &req,
                            httplib::Response &res) {
    std::multimap<std::string, std::string> params(req.params.begin(),
                                                   req.params.end());
    auto response = session.Handle(req.method, req.path, params, req.body);
    res.status = response.status;
    res.set_content(response.body.dump(2) + "\n", "application/json");
  };
  impl_->server.Get(".*", handler);
  impl_->server.Put(".*", handler);
  impl_->server.Post(".*", handler);
  impl_->server.Delete(".*", handler);
  impl_->server.Patch(".*", handler);
}

HttpServer::~HttpServer() { Stop(); }

int HttpServer::BindToAnyPort(const std::string &host) {
  return impl_->server.bind_to_any_port(host);
}

bool HttpServer::Bind(const std::string &host, int port) {
  return impl_->server.bind_to_port(host, port);
}

bool HttpServer::ListenAfterBind() { return impl_->server.listen_after_bind(); }

void HttpServer::Stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace mwe
