// Copyright 2026 The geolaw Authors.
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

#pragma once

#include <cstddef>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace geolaw {

enum class UnitMode { character, token };

struct Token {
  std::string surface;          // UTF-8
  std::size_t doc_char_offset;  // code points into Document::text
  std::size_t char_length;      // code points
};

// One annotated entity occurrence. Character positions count Unicode code
// points of the document text; char_end is exclusive, end_token inclusive.
struct EntitySpan {
  std::size_t doc_id = 0;
  std::size_t start_token = 0;
  std::size_t end_token = 0;
  std::string surface;
  std::string type;
  std::size_t char_length = 0;
  std::size_t char_start = 0;
  std::size_t char_end = 0;
};

struct Document {
  std::u32string text;
  std::vector<Token> tokens;
  std::vector<EntitySpan> spans;  // sorted by char_start, non-overlapping
};

struct Corpus {
  std::vector<Document> documents;
  UnitMode unit_mode = UnitMode::character;

  std::size_t n_entities() const;
  // Throws Error naming the first broken invariant.
  void validate() const;
};

struct ConllOptions {
  std::set<std::string> tag_filter;  // empty accepts every entity type
  bool strict = false;
  std::string doc_separator = "-DOCSTART-";
};

struct JsonlOptions {
  std::set<std::string> tag_filter;
};

// One token per line, "surface<ws>...<ws>tag" with the tag in the last
// column (BIO). Blank lines end a sentence but not the document; a line
// whose first field is the separator marker starts a new document.
Corpus parse_conll(std::istream& in, const ConllOptions& options = {});
Corpus parse_conll(std::string_view text, const ConllOptions& options = {});

// One JSON record per line: {"text": ..., "spans": [{"start","end","type"}]}
// with code-point offsets into text.
Corpus parse_jsonl_spans(std::istream& in, const JsonlOptions& options = {});
Corpus parse_jsonl_spans(std::string_view text, const JsonlOptions& options = {});

// Concatenates document lists, renumbering doc ids.
Corpus merge(std::vector<Corpus> parts);

}  // namespace geolaw
