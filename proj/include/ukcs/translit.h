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

#ifndef UKCS_TRANSLIT_H_
#define UKCS_TRANSLIT_H_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ukcs/textmodel.h"

// Reversible transcription of Ukrainian Cyrillic into Czech-flavored Latin.
//
// The encoding is lossless by construction:
//   - each covered Cyrillic letter maps to a lowercase Latin output, with the
//     source casing carried by the case shape of the output ("Є" -> "Je",
//     "ЄВРО" -> "JEVRO");
//   - a separator (U+00B7) is inserted wherever greedy longest-match decoding
//     would otherwise merge adjacent outputs into a digraph (ц+г -> "c·h");
//   - characters the decoder could misread as outputs -- Latin letters,
//     uncovered Cyrillic, the separator and delimiters themselves -- are
//     carried verbatim inside delimited runs ("OK, добре" -> "⟦OK⟧, dobre").
namespace ukcs {

enum class TranslitError {
  kOk = 0,
  kUnbalancedDelimiter,  // latin_open without a matching latin_close
};

struct DeromanizeResult {
  Line text;  // best-effort decode even when error != kOk
  TranslitError error = TranslitError::kOk;
};

enum class RomanizationMode { kCzech };

class TranslitTable {
 public:
  struct Entry {
    char32_t cyr;       // lowercase Cyrillic codepoint
    std::u32string out;  // lowercase Latin output, never empty
  };

  // The built-in Ukrainian -> Czech table (33 letters; и->y, ш->š, х->ch...).
  static const TranslitTable& czech();
  static const TranslitTable& for_mode(RomanizationMode mode);

  // Builds a table, validating the reversibility requirements: unique keys,
  // unique case-folded outputs, outputs free of reserved/whitespace/Cyrillic
  // characters and stable under case round-tripping. Throws
  // std::invalid_argument on violation.
  static TranslitTable make(std::vector<Entry> entries,
                            std::u32string separator = U"·",
                            std::u32string open = U"⟦",
                            std::u32string close = U"⟧");

  // Table file: one `<cyrillic-char><TAB><latin-string>` mapping per line,
  // `#` comments and blank lines ignored. The file replaces the default
  // table entirely. Throws std::runtime_error with a line number on error.
  static TranslitTable load(std::istream& in, std::string_view name = "<table>");
  static TranslitTable load_file(const std::string& path);

  void save(std::ostream& out) const;

  const std::vector<Entry>& entries() const { return entries_; }
  const std::u32string& separator() const { return separator_; }
  const std::u32string& open_delim() const { return open_; }
  const std::u32string& close_delim() const { return close_; }

  // Lowercase output for a covered lowercase Cyrillic codepoint, else null.
  const std::u32string* lookup(char32_t lower_cyr) const;
  // Covered Cyrillic codepoint for a case-folded output, else 0.
  char32_t decode_lookup(const std::u32string& folded_out) const;

  bool covers(char32_t c) const;          // lowercase form is a key
  bool has_caseless_output(char32_t c) const;
  size_t max_output_len() const { return max_output_len_; }
  // True when a literal occurrence of c in source text must be wrapped in a
  // delimited run to keep decoding unambiguous.
  bool needs_wrap(char32_t c) const;

 private:
  TranslitTable() = default;

  std::vector<Entry> entries_;
  std::unordered_map<char32_t, size_t> by_key_;
  std::unordered_map<std::u32string, char32_t> by_output_;
  std::unordered_set<char32_t> reserved_;      // separator + delimiter chars
  std::unordered_set<char32_t> output_chars_;  // chars of any output
  std::u32string separator_, open_, close_;
  size_t max_output_len_ = 0;
};

Line romanize(std::string_view line, const TranslitTable& table);
DeromanizeResult deromanize(std::string_view line, const TranslitTable& table);

}  // namespace ukcs

#endif  // UKCS_TRANSLIT_H_
