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

#include "ukcs/unicode.h"

#include <algorithm>
#include <iterator>

namespace ukcs::uni {
namespace {

struct CpRange {
  char32_t lo;
  char32_t hi;
};

struct CpPair {
  char32_t from;
  char32_t to;
};

#include "unicode_tables.inc"

template <size_t N>
bool in_ranges(const CpRange (&table)[N], char32_t cp) {
  auto it = std::upper_bound(
      std::begin(table), std::end(table), cp,
      [](char32_t c, const CpRange& r) { return c < r.lo; });
  return it != std::begin(table) && cp <= std::prev(it)->hi;
}

template <size_t N>
char32_t map_cp(const CpPair (&table)[N], char32_t cp) {
  auto it = std::lower_bound(
      std::begin(table), std::end(table), cp,
      [](const CpPair& p, char32_t c) { return p.from < c; });
  if (it != std::end(table) && it->from == cp) return it->to;
  return cp;
}

}  // namespace

char32_t decode_utf8(std::string_view data, size_t& pos) {
  const auto* p = reinterpret_cast<const unsigned char*>(data.data());
  size_t n = data.size();
  unsigned char b0 = p[pos];
  if (b0 < 0x80) {
    ++pos;
    return b0;
  }
  auto cont = [&](size_t i, unsigned char lo, unsigned char hi) {
    return pos + i < n && p[pos + i] >= lo && p[pos + i] <= hi;
  };
  if (b0 >= 0xC2 && b0 <= 0xDF) {
    if (cont(1, 0x80, 0xBF)) {
      char32_t cp = (char32_t(b0 & 0x1F) << 6) | (p[pos + 1] & 0x3F);
      pos += 2;
      return cp;
    }
  } else if (b0 >= 0xE0 && b0 <= 0xEF) {
    // E0 rejects overlongs, ED rejects surrogates.
    unsigned char lo1 = b0 == 0xE0 ? 0xA0 : 0x80;
    unsigned char hi1 = b0 == 0xED ? 0x9F : 0xBF;
    if (cont(1, lo1, hi1) && cont(2, 0x80, 0xBF)) {
      char32_t cp = (char32_t(b0 & 0x0F) << 12) |
                    (char32_t(p[pos + 1] & 0x3F) << 6) | (p[pos + 2] & 0x3F);
      pos += 3;
      return cp;
    }
  } else if (b0 >= 0xF0 && b0 <= 0xF4) {
    unsigned char lo1 = b0 == 0xF0 ? 0x90 : 0x80;
    unsigned char hi1 = b0 == 0xF4 ? 0x8F : 0xBF;
    if (cont(1, lo1, hi1) && cont(2, 0x80, 0xBF) && cont(3, 0x80, 0xBF)) {
      char32_t cp = (char32_t(b0 & 0x07) << 18) |
                    (char32_t(p[pos + 1] & 0x3F) << 12) |
                    (char32_t(p[pos + 2] & 0x3F) << 6) | (p[pos + 3] & 0x3F);
      pos += 4;
      return cp;
    }
  }
  ++pos;
  return kInvalidCp;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(char(cp));
  } else if (cp < 0x800) {
    out.push_back(char(0xC0 | (cp >> 6)));
    out.push_back(char(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(char(0xE0 | (cp >> 12)));
    out.push_back(char(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(char(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(char(0xF0 | (cp >> 18)));
    out.push_back(char(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(char(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(char(0x80 | (cp & 0x3F)));
  }
}

std::string to_utf8(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) append_utf8(out, cp);
  return out;
}

std::u32string to_u32(std::string_view utf8) {
  std::u32string out;
  out.reserve(utf8.size());
  size_t pos = 0;
  while (pos < utf8.size()) {
    char32_t cp = decode_utf8(utf8, pos);
    if (cp != kInvalidCp) out.push_back(cp);
  }
  return out;
}

size_t length(std::string_view utf8) {
  size_t count = 0;
  size_t pos = 0;
  while (pos < utf8.size()) {
    if (decode_utf8(utf8, pos) != kInvalidCp) ++count;
  }
  return count;
}

bool is_nonprintable(char32_t cp) { return in_ranges(kNonPrintable, cp); }
bool is_letter(char32_t cp) { return in_ranges(kLetter, cp); }
bool is_upper(char32_t cp) { return in_ranges(kUpper, cp); }
bool is_lower(char32_t cp) { return in_ranges(kLower, cp); }
bool is_cased(char32_t cp) { return is_upper(cp) || is_lower(cp); }
bool is_digit(char32_t cp) { return in_ranges(kDigit, cp); }
bool is_whitespace(char32_t cp) { return in_ranges(kWhitespace, cp); }
bool is_latin(char32_t cp) { return in_ranges(kLatin, cp); }
bool is_cyrillic(char32_t cp) { return in_ranges(kCyrillic, cp); }

char32_t to_lower(char32_t cp) { return map_cp(kToLower, cp); }
char32_t to_upper(char32_t cp) { return map_cp(kToUpper, cp); }
char32_t to_title(char32_t cp) { return map_cp(kToTitle, cp); }

std::u32string lower_copy(std::u32string_view text) {
  std::u32string out(text);
  for (char32_t& cp : out) cp = to_lower(cp);
  return out;
}

std::u32string upper_copy(std::u32string_view text) {
  std::u32string out(text);
  for (char32_t& cp : out) cp = to_upper(cp);
  return out;
}

std::string lower_copy_utf8(std::string_view utf8) {
  return to_utf8(lower_copy(to_u32(utf8)));
}

std::string upper_copy_utf8(std::string_view utf8) {
  return to_utf8(upper_copy(to_u32(utf8)));
}

}  // namespace ukcs::uni
