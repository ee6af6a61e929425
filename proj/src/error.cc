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

#include "mwe/error.h"

namespace mwe {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidCatalog: return "InvalidCatalog";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kEmptyQuery: return "EmptyQuery";
    case ErrorCode::kMalformedElement: return "MalformedElement";
    case ErrorCode::kTooShort: return "TooShort";
    case ErrorCode::kMissingStems: return "MissingStems";
    case ErrorCode::kMissingHeadword: return "MissingHeadword";
    case ErrorCode::kEmptyDataset: return "EmptyDataset";
    case ErrorCode::kAxisOverlap: return "AxisOverlap";
    case ErrorCode::kTooFewRecords: return "TooFewRecords";
    case ErrorCode::kSameGroup: return "SameGroup";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUnwritableTarget: return "UnwritableTarget";
    case ErrorCode::kUnknownId: return "UnknownId";
    case ErrorCode::kReadOnlyMode: return "ReadOnlyMode";
    case ErrorCode::kNoDataset: return "NoDataset";
    case ErrorCode::kNoCorpus: return "NoCorpus";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace mwe
