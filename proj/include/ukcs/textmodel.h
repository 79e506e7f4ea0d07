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

#ifndef UKCS_TEXTMODEL_H_
#define UKCS_TEXTMODEL_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Line-level text model shared by every stage: byte ingestion with
// printability sanitation, whitespace-preserving tokenization, and
// script/casing classification of tokens.
namespace ukcs {

// One logical sentence/segment. Always well-formed UTF-8, never contains a
// newline; produced by decode_bytes (or trusted in tests).
using Line = std::string;

struct DecodeOptions {
  // Horizontal tab survives by default so the bitext reader can still split
  // src<TAB>tgt; field readers strip it (tab is the wire separator and is
  // never payload inside a field).
  bool keep_tab = true;
};

struct DecodedLine {
  Line text;
  bool cleaned = false;  // true iff any byte or character was removed
};

// Decodes one newline-delimited record (terminator already stripped).
// Malformed UTF-8 bytes are removed, not replaced; characters in categories
// Cc/Cf are removed (except tab, see DecodeOptions). Returns nullopt when the
// result is empty or whitespace-only: such records are rejected, not faults.
std::optional<DecodedLine> decode_bytes(std::string_view raw,
                                        const DecodeOptions& opts = {});

// True when decode_bytes would return `line` unchanged (ingestion re-check).
bool is_clean(std::string_view line, const DecodeOptions& opts = {});

struct Token {
  std::string ws;    // whitespace run preceding the body (may be empty)
  std::string body;  // maximal non-whitespace run, never empty
};

// Lossless tokenization: concatenating ws+body for all tokens, then trailing,
// reproduces the input exactly.
struct TokenizedText {
  std::vector<Token> tokens;
  std::string trailing;  // whitespace after the last body, usually empty

  std::string detokenize() const;
};

TokenizedText tokenize(std::string_view line);

enum class ScriptClass { kLatin, kCyrillic, kDigit, kMixed, kOther };

// Latin iff it has a Latin letter and no Cyrillic one (and vice versa);
// Mixed iff both; Digit iff no letters but at least one digit.
ScriptClass classify_script(std::string_view body);

enum class CasingPattern { kNoCase, kLower, kUpper, kTitle, kIrregular };

// Classification over the token's cased letters. A single cased uppercase
// letter is Title, not Upper ("A" reads as sentence-initial titlecase).
CasingPattern classify_casing(std::string_view body);
CasingPattern classify_casing(std::u32string_view body);

const char* to_string(ScriptClass s);
const char* to_string(CasingPattern p);

}  // namespace ukcs

#endif  // UKCS_TEXTMODEL_H_
