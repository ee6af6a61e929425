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

#ifndef MWE_TOKENIZER_H_
#define MWE_TOKENIZER_H_

#include <string>
#include <string_view>
#include <vector>

namespace mwe {

// Tokens are maximal runs of letters and digits. Everything else separates
// tokens and is discarded. Letters cover Latin, Greek and Cyrillic; combining
// diacritics (e.g. stress marks) inside a word are dropped without splitting
// it.
struct TokenizerConfig {
  bool case_fold = true;
  // Map Cyrillic ё to е (and Ё to Е without case folding).
  bool normalize_yo = true;

  // Short stable description used to key index caches.
  std::string Fingerprint() const;

  friend bool operator==(const TokenizerConfig &,
                         const TokenizerConfig &) = default;
};

struct TokenizeResult {
  std::vector<std::string> tokens;
  // Bytes that were not valid UTF-8 and were skipped.
  int invalid_bytes = 0;
};

TokenizeResult Tokenize(std::string_view text, const TokenizerConfig &config);

// Applies case folding and ё normalization to a single token. Characters that
// the tokenizer would treat as separators are kept as they are.
std::string NormalizeToken(std::string_view token,
                           const TokenizerConfig &config);

}  // namespace mwe

#endif  // MWE_TOKENIZER_H_
