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

#ifndef MWE_SERVICE_H_
#define MWE_SERVICE_H_

#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "mwe/analysis.h"
#include "mwe/corpus.h"
#include "mwe/criteria.h"
#include "mwe/dataset.h"
#include "mwe/evidence.h"
#include "mwe/json_io.h"

namespace mwe {

struct ServiceOptions {
  // Structured dataset file rewritten after every accepted annotation.
  std::string autosave_path;
  bool read_only = false;
  EvidenceOptions evidence;
};

struct RecordSummary {
  std::string id;
  std::string surface;
  bool complete = false;  // passes validation; otherwise a draft
  std::optional<int> total;
  std::optional<GroupVector> group_vector;
};

struct PutOutcome {
  bool accepted = false;
  ValidationResult validation;
  std::optional<int> total;
  std::optional<GroupVector> group_vector;
};

// Single-dataset annotation session behind the HTTP API. Records that fail
// validation are kept as drafts and never enter analysis. All methods are
// thread-safe: reads share a lock, writes are serialized.
class AnnotationSession {
 public:
  // A session without a dataset answers record requests with kNoDataset.
  explicit AnnotationSession(CriteriaCatalog catalog,
                             ServiceOptions options = {});
  AnnotationSession(Dataset dataset, CriteriaCatalog catalog,
                    ServiceOptions options = {});

  void SetCorpus(std::shared_ptr<const CorpusIndex> corpus);

  const CriteriaCatalog &catalog() const { return catalog_; }
  bool dirty() const;
  Dataset Snapshot() const;

  std::vector<RecordSummary> ListRecords() const;
  MweRecord GetRecord(std::string_view id) const;

  // Valid vectors are stored and autosaved; invalid ones are stored as a
  // draft and the violations returned. Absent notes keep the current ones.
  PutOutcome PutAnnotation(std::string_view id, const AnnotationVector &draft,
                           bool replace_notes = true);

  // `check` is "insertion" or "inflection". Never modifies the record.
  EvidenceReport RunCorpusCheck(std::string_view id,
                                std::string_view check) const;

  // Over complete records only.
  AnalysisReport GetAnalysis(const CubeAxes &axes) const;

  struct Response {
    int status = 200;
    Json body;
  };

  // Transport-independent request dispatch for the HTTP routes:
  //   GET  /health, /catalog, /records, /records/{id}, /analysis
  //   PUT  /records/{id}/annotation
  //   POST /records/{id}/check/{insertion|inflection}
  Response Handle(std::string_view method, std::string_view path,
                  const std::multimap<std::string, std::string> &params,
                  std::string_view body);

 private:
  void RequireDataset() const;
  const MweRecord &FindLocked(std::string_view id) const;
  void AutosaveLocked();

  mutable std::shared_mutex mutex_;
  std::optional<Dataset> dataset_;
  CriteriaCatalog catalog_;
  ServiceOptions options_;
  std::shared_ptr<const CorpusIndex> corpus_;
  bool dirty_ = false;
};

// JSON body shared by GET /records/{id}.
Json RecordViewJson(const MweRecord &record, const CriteriaCatalog &catalog);

// HTTP front end over a session.
class HttpServer {
 public:
  explicit HttpServer(AnnotationSession &session);
  ~HttpServer();

  HttpServer(const HttpServer &) = delete;
  HttpServer &operator=(const HttpServer &) = delete;

  // Returns the bound port, or -1.
  int BindToAnyPort(const std::string &host);
  bool Bind(const std::string &host, int port);
  // Blocks until Stop().
  bool ListenAfterBind();
  void Stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// HTTP status code for a library error.
int HttpStatusFor(ErrorCode code);

}  // namespace mwe

#endif  // MWE_SERVICE_H_
