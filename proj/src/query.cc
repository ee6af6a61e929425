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
#include <limits>

#include "mwe/corpus.h"
#include "mwe/error.h"

namespace mwe {

bool QueryElement::Matches(std::string_view token) const {
  switch (kind) {
    case ElementKind::kAny: return true;
    case ElementKind::kLiteral: return token == text;
    case ElementKind::kPrefix: return token.substr(0, text.size()) == text;
  }
  return false;
}

std::string WildcardQuery::ToString() const {
  std::string out;
  for (const auto &e : elements) {
    if (!out.empty()) out += ' ';
    if (e.kind != ElementKind::kAny) out += e.text;
    if (e.kind != ElementKind::kLiteral) out += '*';
  }
  return out;
}

WildcardQuery ParseQuery(std::string_view text, const TokenizerConfig &config) {
  WildcardQuery query;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t begin = text.find_first_not_of(" \t\r\n", pos);
    if (begin == std::string_view::npos) break;
    size_t end = text.find_first_of(" \t\r\n", begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view word = text.substr(begin, end - begin);
    pos = end;

    size_t star = word.find('*');
    if (word == "*") {
      query.elements.push_back({ElementKind::kAny, ""});
    } else if (star == std::string_view::npos) {
      query.elements.push_back(
          {ElementKind::kLiteral, NormalizeToken(word, config)});
    } else if (star == word.size() - 1) {
      query.elements.push_back(
          {ElementKind::kPrefix,
           NormalizeToken(word.substr(0, word.size() - 1), config)});
    } else {
      throw Error(ErrorCode::kMalformedElement,
                  "'*' must be the last character of an element: '" +
                      std::string(word) + "'");
    }
  }
  if (query.elements.empty()) {
    throw Error(ErrorCode::kEmptyQuery, "query has no elements");
  }
  return query;
}

std::vector<Hit> FindMatches(const CorpusIndex &index,
                             const WildcardQuery &query) {
  const auto &elements = query.elements;
  const size_t n = elements.size();
  std::vector<Hit> hits;
  if (n == 0) return hits;

  auto emit = [&](std::uint32_t doc, std::uint32_t start) {
    Hit hit;
    hit.document = doc;
    hit.offset = start - index.document_begin(doc);
    for (size_t k = 0; k < n; ++k) hit.tokens.push_back(index.token(start + k));
    hits.push_back(std::move(hit));
  };

  // Anchor on the element with the fewest occurrences.
  int anchor = -1;
  size_t anchor_count = std::numeric_limits<size_t>::max();
  for (size_t k = 0; k < n; ++k) {
    size_t count = 0;
    if (elements[k].kind == ElementKind::kLiteral) {
      count = index.Postings(elements[k].text).size();
    } else if (elements[k].kind == ElementKind::kPrefix) {
      auto [first, last] = index.PrefixRange(elements[k].text);
      for (size_t v = first; v < last; ++v) count += index.PostingsAt(v).size();
    } else {
      continue;
    }
    if (count < anchor_count) {
      anchor = static_cast<int>(k);
      anchor_count = count;
    }
  }

  if (anchor < 0) {
    for (size_t doc = 0; doc < index.document_count(); ++doc) {
      std::uint32_t begin = index.document_begin(doc);
      std::uint32_t end = index.document_end(doc);
      for (std::uint32_t start = begin; start + n <= end; ++start) {
        emit(static_cast<std::uint32_t>(doc), start);
      }
    }
    return hits;
  }
  if (anchor_count == 0) return hits;

  std::vector<std::uint32_t> positions;
  const auto &anchor_element = elements[anchor];
  if (anchor_element.kind == ElementKind::kLiteral) {
    auto p = index.Postings(anchor_element.text);
    positions.assign(p.begin(), p.end());
  } else {
    auto [first, last] = index.PrefixRange(anchor_element.text);
    for (size_t v = first; v < last; ++v) {
      auto p = index.PostingsAt(v);
      positions.insert(positions.end(), p.begin(), p.end());
    }
    std::sort(positions.begin(), positions.end());
  }

  for (std::uint32_t pos : positions) {
    if (pos < static_cast<std::uint32_t>(anchor)) continue;
    std::uint32_t start = pos - anchor;
    std::uint32_t doc = index.DocumentOf(pos);
    if (start < index.document_begin(doc) ||
        start + n > index.document_end(doc)) {
      continue;
    }
    bool ok = true;
    for (size_t k = 0; k < n && ok; ++k) {
      if (static_cast<int>(k) == anchor) continue;
      ok = elements[k].Matches(index.token(start + k));
    }
    if (ok) emit(doc, start);
  }
  return hits;
}

}  // namespace mwe
