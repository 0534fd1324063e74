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

#include "geolaw/corpus.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <optional>
#include <sstream>

#include "geolaw/error.hpp"
#include "geolaw/unicode.hpp"
#include "json.hpp"

namespace geolaw {
namespace {

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), {});
}

// Splits into lines, dropping a trailing '\r'. The final empty piece after a
// terminating newline is not returned.
std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    pos = nl + 1;
  }
  return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

bool accepted(const std::set<std::string>& filter, const std::string& type) {
  return filter.empty() || filter.count(type) > 0;
}

EntitySpan make_span(const Document& doc, std::size_t doc_id, std::size_t start_token,
                     std::size_t end_token, std::size_t char_start, std::size_t char_end,
                     std::string type) {
  EntitySpan span;
  span.doc_id = doc_id;
  span.start_token = start_token;
  span.end_token = end_token;
  span.char_start = char_start;
  span.char_end = char_end;
  span.char_length = char_end - char_start;
  span.surface = unicode::encode(
      std::u32string_view(doc.text).substr(char_start, char_end - char_start));
  span.type = std::move(type);
  return span;
}

class ConllBuilder {
 public:
  explicit ConllBuilder(const ConllOptions& options) : options_(options) {}

  void token(std::string_view surface, std::string_view tag, std::size_t line) {
    const std::u32string cps = unicode::decode(surface);
    if (tag == "O") {
      close();
    } else if (tag.size() > 2 && (tag.substr(0, 2) == "B-" || tag.substr(0, 2) == "I-")) {
      const std::string type(tag.substr(2));
      if (tag[0] == 'B') {
        close();
        open(type);
      } else if (!open_ || open_->type != type) {
        if (options_.strict) throw ParseError("stray I- tag", line);
        close();
        open(type);
      }
    } else {
      throw ParseError("unrecognized tag '" + std::string(tag) + "'", line);
    }
    append_token(surface, cps);
  }

  void sentence_break() { close(); }

  void document_break() {
    close();
    if (!doc_.tokens.empty()) corpus_.documents.push_back(std::move(doc_));
    doc_ = Document{};
    prev_cjk_ = false;
  }

  Corpus finish() {
    document_break();
    return std::move(corpus_);
  }

 private:
  struct OpenSpan {
    std::string type;
    std::size_t start_token;
    std::size_t char_start;
  };

  void open(const std::string& type) {
    open_ = OpenSpan{type, doc_.tokens.size(), 0};
    pending_start_ = true;
  }

  void close() {
    if (!open_) return;
    if (accepted(options_.tag_filter, open_->type) && doc_.tokens.size() > open_->start_token) {
      const Token& last = doc_.tokens.back();
      doc_.spans.push_back(make_span(doc_, corpus_.documents.size(), open_->start_token,
                                     doc_.tokens.size() - 1, open_->char_start,
                                     last.doc_char_offset + last.char_length, open_->type));
    }
    open_.reset();
  }

  void append_token(std::string_view surface, const std::u32string& cps) {
    const bool cjk = unicode::all_cjk(cps);
    if (!doc_.text.empty() && !(prev_cjk_ && cjk)) doc_.text.push_back(U' ');
    const std::size_t offset = doc_.text.size();
    doc_.text += cps;
    doc_.tokens.push_back(Token{std::string(surface), offset, cps.size()});
    if (pending_start_) {
      open_->char_start = offset;
      pending_start_ = false;
    }
    prev_cjk_ = cjk;
  }

  const ConllOptions& options_;
  Corpus corpus_;
  Document doc_;
  std::optional<OpenSpan> open_;
  bool pending_start_ = false;
  bool prev_cjk_ = false;
};

// Whitespace tokens, with every CJK code point split into its own token.
std::vector<Token> tokenize(const std::u32string& text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const auto emit = [&](std::size_t begin, std::size_t end) {
    tokens.push_back(Token{unicode::encode(std::u32string_view(text).substr(begin, end - begin)),
                           begin, end - begin});
  };
  while (i < text.size()) {
    if (unicode::is_space(text[i])) {
      ++i;
      continue;
    }
    if (unicode::is_cjk(text[i])) {
      emit(i, i + 1);
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < text.size() && !unicode::is_space(text[end]) && !unicode::is_cjk(text[end])) {
      ++end;
    }
    emit(i, end);
    i = end;
  }
  return tokens;
}

}  // namespace

std::size_t Corpus::n_entities() const {
  std::size_t n = 0;
  for (const auto& doc : documents) n += doc.spans.size();
  return n;
}

void Corpus::validate() const {
  for (std::size_t d = 0; d < documents.size(); ++d) {
    const Document& doc = documents[d];
    for (std::size_t t = 0; t < doc.tokens.size(); ++t) {
      const Token& tok = doc.tokens[t];
      if (tok.surface.empty()) throw Error("empty token surface");
      if (t > 0 && tok.doc_char_offset <= doc.tokens[t - 1].doc_char_offset) {
        throw Error("token offsets not strictly increasing");
      }
      if (tok.doc_char_offset + tok.char_length > doc.text.size()) {
        throw Error("token outside document text");
      }
    }
    for (std::size_t s = 0; s < doc.spans.size(); ++s) {
      const EntitySpan& span = doc.spans[s];
      if (span.doc_id != d) throw Error("span doc_id mismatch");
      if (span.start_token > span.end_token || span.end_token >= doc.tokens.size()) {
        throw Error("span token range invalid");
      }
      if (span.char_end <= span.char_start || span.char_end > doc.text.size() ||
          span.char_length != span.char_end - span.char_start) {
        throw Error("span character range invalid");
      }
      const std::u32string_view covered =
          std::u32string_view(doc.text).substr(span.char_start, span.char_length);
      if (unicode::encode(covered) != span.surface) {
        throw Error("span surface does not match document text");
      }
      if (s > 0 && doc.spans[s - 1].char_end > span.char_start) {
        throw Error("spans overlap or are unsorted");
      }
    }
  }
}

Corpus parse_conll(std::istream& in, const ConllOptions& options) {
  const std::string text = read_all(in);
  return parse_conll(std::string_view(text), options);
}

Corpus parse_conll(std::string_view text, const ConllOptions& options) {
  ConllBuilder builder(options);
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    if (!unicode::is_valid(lines[i])) throw EncodingError("invalid UTF-8", lineno);
    const auto fields = split_fields(lines[i]);
    if (fields.empty()) {
      builder.sentence_break();
      continue;
    }
    if (!options.doc_separator.empty() && fields.front() == options.doc_separator) {
      builder.document_break();
      continue;
    }
    if (fields.size() < 2) throw ParseError("expected surface and tag", lineno);
    builder.token(fields.front(), fields.back(), lineno);
  }
  return builder.finish();
}

Corpus parse_jsonl_spans(std::istream& in, const JsonlOptions& options) {
  const std::string text = read_all(in);
  return parse_jsonl_spans(std::string_view(text), options);
}

Corpus parse_jsonl_spans(std::string_view text, const JsonlOptions& options) {
  using nlohmann::json;
  Corpus corpus;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    if (!unicode::is_valid(lines[i])) throw EncodingError("invalid UTF-8", lineno);
    if (split_fields(lines[i]).empty()) continue;

    json record;
    try {
      record = json::parse(lines[i]);
    } catch (const json::parse_error&) {
      throw ParseError("invalid JSON record", lineno);
    }
    if (!record.is_object() || !record.contains("text") || !record["text"].is_string()) {
      throw ParseError("record needs a string \"text\" field", lineno);
    }
    Document doc;
    doc.text = unicode::decode(record["text"].get<std::string>());
    doc.tokens = tokenize(doc.text);

    struct Raw {
      long long start, end;
      std::string type;
    };
    std::vector<Raw> raw;
    if (record.contains("spans")) {
      if (!record["spans"].is_array()) throw ParseError("\"spans\" must be an array", lineno);
      for (const auto& s : record["spans"]) {
        if (!s.is_object() || !s.contains("start") || !s.contains("end") ||
            !s["start"].is_number_integer() || !s["end"].is_number_integer()) {
          throw ParseError("span needs integer start and end", lineno);
        }
        std::string type;
        if (s.contains("type") && s["type"].is_string()) type = s["type"].get<std::string>();
        raw.push_back(Raw{s["start"].get<long long>(), s["end"].get<long long>(), type});
      }
    }
    std::stable_sort(raw.begin(), raw.end(),
                     [](const Raw& a, const Raw& b) { return a.start < b.start; });
    const auto len = static_cast<long long>(doc.text.size());
    for (std::size_t k = 0; k < raw.size(); ++k) {
      if (raw[k].start < 0 || raw[k].end > len || raw[k].start >= raw[k].end) {
        throw ParseError("span out of bounds", lineno);
      }
      if (k > 0 && raw[k].start < raw[k - 1].end) throw ParseError("overlapping spans", lineno);
    }

    const std::size_t doc_id = corpus.documents.size();
    for (const Raw& r : raw) {
      if (!accepted(options.tag_filter, r.type)) continue;
      const auto start = static_cast<std::size_t>(r.start);
      const auto end = static_cast<std::size_t>(r.end);
      // First token ending after start, last token beginning before end.
      std::optional<std::size_t> first, last;
      for (std::size_t t = 0; t < doc.tokens.size(); ++t) {
        const Token& tok = doc.tokens[t];
        if (tok.doc_char_offset + tok.char_length > start && tok.doc_char_offset < end) {
          if (!first) first = t;
          last = t;
        }
      }
      if (!first) throw ParseError("span covers no token", lineno);
      doc.spans.push_back(make_span(doc, doc_id, *first, *last, start, end, r.type));
    }
    corpus.documents.push_back(std::move(doc));
  }
  return corpus;
}

Corpus merge(std::vector<Corpus> parts) {
  Corpus out;
  if (!parts.empty()) out.unit_mode = parts.front().unit_mode;
  for (Corpus& part : parts) {
    for (Document& doc : part.documents) {
      const std::size_t id = out.documents.size();
      for (EntitySpan& span : doc.spans) span.doc_id = id;
      out.documents.push_back(std::move(doc));
    }
  }
  return out;
}

}  // namespace geolaw
