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

#ifndef MWE_JSON_IO_H_
#define MWE_JSON_IO_H_

#include <string>

#include "json.hpp"
#include "mwe/analysis.h"
#include "mwe/criteria.h"
#include "mwe/evidence.h"

namespace mwe {

using Json = nlohmann::ordered_json;

// Record object of the structured dataset format.
Json RecordToJson(const MweRecord &record);

// Throws std::exception subclasses on malformed input.
MweRecord RecordFromJson(const Json &json);

// {"cells": [16 x int|null], "notes": {"c05": "..."}}. Throws
// std::invalid_argument when the shape is wrong; values other than 0/1 are
// accepted and left to validation.
AnnotationVector AnnotationFromJson(const Json &json);

Json ValidationToJson(const ValidationResult &result);
Json EvidenceToJson(const EvidenceReport &report);
Json CatalogToJson(const CriteriaCatalog &catalog);

// The machine-readable analysis report shared by the CLI, the exporters and
// the HTTP service.
Json ReportToJson(const AnalysisReport &report, const CriteriaCatalog &catalog);

// ReportToJson pretty-printed with a trailing newline.
std::string ReportToJsonText(const AnalysisReport &report,
                             const CriteriaCatalog &catalog);

}  // namespace mwe

#endif  // MWE_JSON_IO_H_
