// Copyright 2026 The ukcs Authors
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

#ifndef UKCS_UNICODE_H_
#define UKCS_UNICODE_H_

#include <cstdint>
#include <string>
#include <string_view>

// Minimal Unicode support: UTF-8 transcoding plus the character properties
// the toolkit needs (categories, simple case mappings, Latin/Cyrillic script
// membership). Tables are generated from the Unicode database by
// tools/gen_unicode_tables.py; no external Unicode library is required.
namespace ukcs::uni {

inline constexpr char32_t kInvalidCp = 0xFFFFFFFF;

// Decodes the scalar value starting at data[pos]. On success returns the
// codepoint and advances pos past the sequence. On malformed input (bad lead
// byte, truncated or overlong sequence, surrogate, > U+10FFFF) returns
// kInvalidCp and advances pos by exactly one byte.
char32_t decode_utf8(std::string_view data, size_t& pos);

void append_utf8(std::string& out, char32_t cp);
std::string to_utf8(std::u32string_view text);

// Lossy conversion: malformed bytes are dropped. Input produced by the
// ingestion layer is always valid, so this is normally exact.
std::u32string to_u32(std::string_view utf8);

// Number of Unicode scalars in a UTF-8 string (malformed bytes count zero).
size_t length(std::string_view utf8);

bool is_nonprintable(char32_t cp);  // category Cc or Cf (tab included)
bool is_letter(char32_t cp);        // category L*
bool is_upper(char32_t cp);         // category Lu or Lt
bool is_lower(char32_t cp);         // category Ll
bool is_cased(char32_t cp);
bool is_digit(char32_t cp);         // category Nd
bool is_whitespace(char32_t cp);    // White_Space property
bool is_latin(char32_t cp);         // script Latin
bool is_cyrillic(char32_t cp);      // script Cyrillic

// Simple (1:1) case mappings; identity when no mapping exists.
char32_t to_lower(char32_t cp);
char32_t to_upper(char32_t cp);
char32_t to_title(char32_t cp);

std::u32string lower_copy(std::u32string_view text);
std::u32string upper_copy(std::u32string_view text);
std::string lower_copy_utf8(std::string_view utf8);
std::string upper_copy_utf8(std::string_view utf8);

}  // namespace ukcs::uni

#endif  // UKCS_UNICODE_H_
