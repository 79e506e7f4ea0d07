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

#include "ukcs/textmodel.h"

#include "ukcs/unicode.h"

namespace ukcs {
namespace {

bool removable(char32_t cp, const DecodeOptions& opts) {
  if (cp == U'\t') return !opts.keep_tab;
  return uni::is_nonprintable(cp);
}

}  // namespace

std::optional<DecodedLine> decode_bytes(std::string_view raw,
                                        const DecodeOptions& opts) {
  DecodedLine out;
  out.text.reserve(raw.size());
  bool all_whitespace = true;
  size_t pos = 0;
  while (pos < raw.size()) {
    size_t start = pos;
    char32_t cp = uni::decode_utf8(raw, pos);
    if (cp == uni::kInvalidCp || removable(cp, opts)) {
      out.cleaned = true;
      continue;
    }
    if (!uni::is_whitespace(cp)) all_whitespace = false;
    out.text.append(raw, start, pos - start);
  }
  if (out.text.empty() || all_whitespace) return std::nullopt;
  return out;
}

bool is_clean(std::string_view line, const DecodeOptions& opts) {
  size_t pos = 0;
  bool all_whitespace = true;
  while (pos < line.size()) {
    char32_t cp = uni::decode_utf8(line, pos);
    if (cp == uni::kInvalidCp || removable(cp, opts)) return false;
    if (!uni::is_whitespace(cp)) all_whitespace = false;
  }
  return !line.empty() && !all_whitespace;
}

std::string TokenizedText::detokenize() const {
  std::string out;
  for (const Token& t : tokens) {
    out += t.ws;
    out += t.body;
  }
  out += trailing;
  return out;
}

TokenizedText tokenize(std::string_view line) {
  TokenizedText out;
  std::string ws;
  std::string body;
  size_t pos = 0;
  while (pos < line.size()) {
    size_t start = pos;
    char32_t cp = uni::decode_utf8(line, pos);
    std::string_view chunk = line.substr(start, pos - start);
    if (cp != uni::kInvalidCp && uni::is_whitespace(cp)) {
      if (!body.empty()) {
        out.tokens.push_back({std::move(ws), std::move(body)});
        ws.clear();
        body.clear();
      }
      ws.append(chunk);
    } else {
      body.append(chunk);
    }
  }
  if (!body.empty()) {
    out.tokens.push_back({std::move(ws), std::move(body)});
  } else {
    out.trailing = std::move(ws);
  }
  return out;
}

ScriptClass classify_script(std::string_view body) {
  bool latin = false, cyrillic = false, other_letter = false, digit = false;
  size_t pos = 0;
  while (pos < body.size()) {
    char32_t cp = uni::decode_utf8(body, pos);
    if (cp == uni::kInvalidCp) continue;
    if (uni::is_letter(cp)) {
      if (uni::is_latin(cp)) {
        latin = true;
      } else if (uni::is_cyrillic(cp)) {
        cyrillic = true;
      } else {
        other_letter = true;
      }
    } else if (uni::is_digit(cp)) {
      digit = true;
    }
  }
  if (latin && cyrillic) return ScriptClass::kMixed;
  if (latin) return ScriptClass::kLatin;
  if (cyrillic) return ScriptClass::kCyrillic;
  if (other_letter) return ScriptClass::kOther;
  if (digit) return ScriptClass::kDigit;
  return ScriptClass::kOther;
}

CasingPattern classify_casing(std::u32string_view body) {
  size_t cased = 0, upper = 0, lower = 0;
  bool first_upper = false;
  bool tail_all_lower = true;
  for (char32_t cp : body) {
    if (!uni::is_cased(cp)) continue;
    bool up = uni::is_upper(cp);
    if (cased == 0) {
      first_upper = up;
    } else if (up) {
      tail_all_lower = false;
    }
    ++cased;
    up ? ++upper : ++lower;
  }
  if (cased == 0) return CasingPattern::kNoCase;
  if (lower == cased) return CasingPattern::kLower;
  if (upper == cased && cased >= 2) return CasingPattern::kUpper;
  if (first_upper && tail_all_lower) return CasingPattern::kTitle;
  return CasingPattern::kIrregular;
}

CasingPattern classify_casing(std::string_view body) {
  return classify_casing(uni::to_u32(body));
}

const char* to_string(ScriptClass s) {
  switch (s) {
    case ScriptClass::kLatin: return "latin";
    case ScriptClass::kCyrillic: return "cyrillic";
    case ScriptClass::kDigit: return "digit";
    case ScriptClass::kMixed: return "mixed";
    case ScriptClass::kOther: return "other";
  }
  return "other";
}

const char* to_string(CasingPattern p) {
  switch (p) {
    case CasingPattern::kNoCase: return "nocase";
    case CasingPattern::kLower: return "lower";
    case CasingPattern::kUpper: return "upper";
    case CasingPattern::kTitle: return "title";
    case CasingPattern::kIrregular: return "irregular";
  }
  return "irregular";
}

}  // namespace ukcs
