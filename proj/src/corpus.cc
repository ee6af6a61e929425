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

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "mwe/corpus.h"
#include "mwe/error.h"

namespace mwe {

namespace {

constexpr std::string_view kCacheMagic = "mwe-corpus-index";
constexpr int kCacheVersion = 1;

}  // namespace

CorpusIndex CorpusIndex::Build(std::span<const std::string> documents,
                               const TokenizerConfig &config) {
  std::vector<std::vector<std::string>> tokenized;
  tokenized.reserve(documents.size());
  int invalid = 0;
  for (const auto &doc : documents) {
    auto result = Tokenize(doc, config);
    invalid += result.invalid_bytes;
    tokenized.push_back(std::move(result.tokens));
  }
  CorpusIndex index = FromTokens(tokenized, config);
  index.invalid_bytes_ = invalid;
  return index;
}

CorpusIndex CorpusIndex::FromTokens(
    const std::vector<std::vector<std::string>> &documents,
    const TokenizerConfig &config) {
  CorpusIndex index;
  index.config_ = config;
  index.Finish(documents);
  return index;
}

void CorpusIndex::Finish(
    const std::vector<std::vector<std::string>> &documents) {
  size_t total = 0;
  for (const auto &doc : documents) total += doc.size();
  if (total == 0) {
    throw Error(ErrorCode::kEmptyCorpus, "corpus contains no tokens");
  }

  std::map<std::string_view, std::uint32_t> ids;
  for (const auto &doc : documents) {
    for (const auto &tok : doc) ids.emplace(tok, 0);
  }
  vocabulary_.reserve(ids.size());
  for (auto &[tok, id] : ids) {
    id = static_cast<std::uint32_t>(vocabulary_.size());
    vocabulary_.emplace_back(tok);
  }

  postings_.assign(vocabulary_.size(), {});
  tokens_.reserve(total);
  doc_starts_.assign(1, 0);
  for (const auto &doc : documents) {
    for (const auto &tok : doc) {
      std::uint32_t id = ids.find(tok)->second;
      postings_[id].push_back(static_cast<std::uint32_t>(tokens_.size()));
      tokens_.push_back(id);
    }
    doc_starts_.push_back(static_cast<std::uint32_t>(tokens_.size()));
  }
}

std::uint32_t CorpusIndex::DocumentOf(std::uint32_t position) const {
  auto it = std::upper_bound(doc_starts_.begin(), doc_starts_.end(), position);
  return static_cast<std::uint32_t>(it - doc_starts_.begin() - 1);
}

std::span<const std::uint32_t> CorpusIndex::Postings(
    std::string_view token) const {
  auto it = std::lower_bound(vocabulary_.begin(), vocabulary_.end(), token);
  if (it == vocabulary_.end() || *it != token) return {};
  return postings_[it - vocabulary_.begin()];
}

std::pair<size_t, size_t> CorpusIndex::PrefixRange(
    std::string_view prefix) const {
  auto first = std::lower_bound(vocabulary_.begin(), vocabulary_.end(), prefix);
  auto last = first;
  while (last != vocabulary_.end() &&
         std::string_view(*last).substr(0, prefix.size()) == prefix) {
    ++last;
  }
  return {static_cast<size_t>(first - vocabulary_.begin()),
          static_cast<size_t>(last - vocabulary_.begin())};
}

void CorpusIndex::SaveCache(const std::string &path) const {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path);
  out << kCacheMagic << " " << kCacheVersion << "\n";
  out << "config " << config_.Fingerprint() << "\n";
  out << "invalid_bytes " << invalid_bytes_ << "\n";
  out << "documents " << document_count() << "\n";
  for (size_t d = 0; d < document_count(); ++d) {
    for (std::uint32_t p = document_begin(d); p < document_end(d); ++p) {
      if (p != document_begin(d)) out << ' ';
      out << token(p);
    }
    out << '\n';
  }
  if (!out) throw Error(ErrorCode::kIoError, "failed writing " + path);
}

std::optional<CorpusIndex> CorpusIndex::LoadCache(
    const std::string &path, const TokenizerConfig &config) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path);
  auto corrupt = [&](const std::string &what) {
    return Error(ErrorCode::kParseError,
                 "corrupt index cache " + path + ": " + what);
  };

  std::string line;
  if (!std::getline(in, line)) throw corrupt("empty file");
  std::istringstream header(line);
  std::string magic;
  int version = 0;
  if (!(header >> magic >> version) || magic != kCacheMagic) {
    throw corrupt("bad header");
  }
  if (version != kCacheVersion) return std::nullopt;

  if (!std::getline(in, line) || line.rfind("config ", 0) != 0) {
    throw corrupt("missing config line");
  }
  if (line.substr(7) != config.Fingerprint()) return std::nullopt;

  int invalid = 0;
  size_t docs = 0;
  if (!std::getline(in, line) ||
      std::sscanf(line.c_str(), "invalid_bytes %d", &invalid) != 1) {
    throw corrupt("missing invalid_bytes line");
  }
  if (!std::getline(in, line) ||
      std::sscanf(line.c_str(), "documents %zu", &docs) != 1) {
    throw corrupt("missing documents line");
  }

  std::vector<std::vector<std::string>> documents(docs);
  for (size_t d = 0; d < docs; ++d) {
    if (!std::getline(in, line)) throw corrupt("truncated");
    std::istringstream tokens(line);
    std::string tok;
    while (tokens >> tok) documents[d].push_back(tok);
  }
  CorpusIndex index = FromTokens(documents, config);
  index.invalid_bytes_ = invalid;
  return index;
}

std::vector<std::string> SplitBlankLineDocuments(std::string_view text) {
  std::vector<std::string> docs;
  std::string current;
  bool has_content = false;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    bool blank = line.find_first_not_of(" \t\r") == std::string_view::npos;
    if (blank) {
      if (has_content) docs.push_back(std::move(current));
      current.clear();
      has_content = false;
    } else {
      if (has_content) current += '\n';
      current.append(line);
      has_content = true;
    }
    pos = end + 1;
  }
  if (has_content) docs.push_back(std::move(current));
  return docs;
}

}  // namespace mwe
