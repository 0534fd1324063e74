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

#include <string>
#include <string_view>

namespace geolaw::unicode {

// Decodes UTF-8 into code points. Throws EncodingError (line 0) on invalid
// sequences, overlongs, surrogates and values above U+10FFFF.
std::u32string decode(std::string_view utf8);

std::string encode(std::u32string_view text);
void append_utf8(std::string& out, char32_t cp);

bool is_valid(std::string_view utf8);

// Han ideographs, kana, CJK punctuation and fullwidth forms. Hangul is
// excluded: Korean text is space-delimited.
bool is_cjk(char32_t cp);
bool all_cjk(std::u32string_view text);

bool is_space(char32_t cp);

// Simple one-to-one lowercase mapping for ASCII, Latin-1, Latin
// Extended-A, Greek and Cyrillic. Other code points pass through.
char32_t fold(char32_t cp);
std::u32string fold(std::u32string_view text);

}  // namespace geolaw::unicode
