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

#ifndef MWE_CORPUS_H_
#define MWE_CORPUS_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mwe/tokenizer.h"

namespace mwe {

// Positional inverted index over a tokenized corpus. Immutable once built;
// concurrent reads are safe.
//
// Tokens of all documents are stored back to back and addressed by a global
// position. Matches never cross document boundaries.
class CorpusIndex {
 public:
  // Throws Error(kEmptyCorpus) when the documents contain no tokens.
  static CorpusIndex Build(std::span<const std::string> documents,
                           const TokenizerConfig &config);

  // Builds from documents that are already tokenized and normalized.
  static CorpusIndex FromTokens(
      const std::vector<std::vector<std::string>> &documents,
      const TokenizerConfig &config);

  const TokenizerConfig &config() const { return config_; }
  size_t token_count() const { return tokens_.size(); }
  size_t document_count() const { return doc_starts_.size() - 1; }
  int invalid_bytes() const { return invalid_bytes_; }

  const std::string &token(std::uint32_t position) const {
    return vocabulary_[tokens_[position]];
  }
  std::uint32_t document_begin(size_t doc) const { return doc_starts_[doc]; }
  std::uint32_t document_end(size_t doc) const { return doc_starts_[doc + 1]; }

  // Document holding a global position.
  std::uint32_t DocumentOf(std::uint32_t position) const;

  // Sorted distinct tokens.
  const std::vector<std::string> &vocabulary() const { return vocabulary_; }

  // Ascending global positions of an exact token; empty if unknown.
  std::span<const std::uint32_t> Postings(std::string_view token) const;

  // Vocabulary indices [first, last) of tokens starting with `prefix`.
  std::pair<size_t, size_t> PrefixRange(std::string_view prefix) const;
  std::span<const std::uint32_t> PostingsAt(size_t vocab_index) const {
    return postings_[vocab_index];
  }

  // Versioned text cache. LoadCache returns nullopt when the file was
  // written by another format version or another tokenizer configuration,
  // and throws Error(kParseError) when it is corrupt.
  void SaveCache(const std::string &path) const;
  static std::optional<CorpusIndex> LoadCache(const std::string &path,
                                              const TokenizerConfig &config);

 private:
  CorpusIndex() = default;
  void Finish(const std::vector<std::vector<std::string>> &documents);

  TokenizerConfig config_;
  std::vector<std::uint32_t> tokens_;  // vocabulary index per position
  std::vector<std::uint32_t> doc_starts_{0};
  std::vector<std::string> vocabulary_;
  std::vector<std::vector<std::uint32_t>> postings_;
  int invalid_bytes_ = 0;
};

// Splits a single corpus file into documents at blank lines.
std::vector<std::string> SplitBlankLineDocuments(std::string_view text);

enum class ElementKind { kLiteral, kAny, kPrefix };

struct QueryElement {
  ElementKind kind = ElementKind::kAny;
  std::string text;  // literal token or prefix; empty for kAny

  bool Matches(std::string_view token) const;

  friend bool operator==(const QueryElement &, const QueryElement &) = default;
};

// Space-separated elements: `word` matches that token, `*` any single
// token, `stem*` any token beginning with the stem (including the stem
// itself).
struct WildcardQuery {
  std::vector<QueryElement> elements;

  std::string ToString() const;

  friend bool operator==(const WildcardQuery &, const WildcardQuery &) = default;
};

// Literals and prefixes are normalized with `config`. Throws
// Error(kEmptyQuery) or Error(kMalformedElement).
WildcardQuery ParseQuery(std::string_view text, const TokenizerConfig &config);

struct Hit {
  std::uint32_t document = 0;
  std::uint32_t offset = 0;  // within the document
  std::vector<std::string> tokens;

  friend bool operator==(const Hit &, const Hit &) = default;
};

// Every span matching the query, ordered by position. Overlapping hits are
// all reported.
std::vector<Hit> FindMatches(const CorpusIndex &index,
                             const WildcardQuery &query);

}  // namespace mwe

#endif  // MWE_CORPUS_H_
