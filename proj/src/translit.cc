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

#include "ukcs/translit.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ukcs/unicode.h"

namespace ukcs {
namespace {

bool has_cased_char(const std::u32string& s) {
  return std::any_of(s.begin(), s.end(), [](char32_t c) { return uni::is_cased(c); });
}

// Uppercases the first cased character only ("je" -> "Je").
std::u32string title_copy(const std::u32string& s) {
  std::u32string r = s;
  for (char32_t& c : r) {
    if (uni::is_cased(c)) {
      c = uni::to_title(c);
      break;
    }
  }
  return r;
}

bool is_upper_cyrillic(char32_t c) {
  return uni::is_cyrillic(c) && uni::is_upper(c);
}

std::string describe_cp(char32_t c) {
  std::ostringstream os;
  os << "U+" << std::hex << std::uppercase << static_cast<uint32_t>(c);
  return os.str();
}

[[noreturn]] void table_error(std::string_view name, size_t lineno, const std::string& msg) {
  std::ostringstream os;
  os << name << ":" << lineno << ": " << msg;
  throw std::runtime_error(os.str());
}

}  // namespace

const TranslitTable& TranslitTable::czech() {
  static const TranslitTable table = TranslitTable::make({
      {U'а', U"a"},  {U'б', U"b"},  {U'в', U"v"},  {U'г', U"h"},
      {U'ґ', U"g"},  {U'д', U"d"},  {U'е', U"e"},  {U'є', U"je"},
      {U'ж', U"ž"},  {U'з', U"z"},  {U'и', U"y"},  {U'і', U"i"},
      {U'ї', U"ji"}, {U'й', U"j"},  {U'к', U"k"},  {U'л', U"l"},
      {U'м', U"m"},  {U'н', U"n"},  {U'о', U"o"},  {U'п', U"p"},
      {U'р', U"r"},  {U'с', U"s"},  {U'т', U"t"},  {U'у', U"u"},
      {U'ф', U"f"},  {U'х', U"ch"}, {U'ц', U"c"},  {U'ч', U"č"},
      {U'ш', U"š"},  {U'щ', U"šč"}, {U'ь', U"ʼ"},
      {U'ю', U"ju"}, {U'я', U"ja"},
  });
  return table;
}

const TranslitTable& TranslitTable::for_mode(RomanizationMode mode) {
  switch (mode) {
    case RomanizationMode::kCzech:
      return czech();
  }
  throw std::logic_error("unknown romanization mode");
}

TranslitTable TranslitTable::make(std::vector<Entry> entries,
                                  std::u32string separator,
                                  std::u32string open,
                                  std::u32string close) {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("translit table: " + msg); };
  if (entries.empty()) fail("no entries");
  if (separator.empty() || open.empty() || close.empty()) fail("empty reserved string");
  if (open == close || open == separator || close == separator) {
    fail("reserved strings must be distinct");
  }

  TranslitTable t;
  t.separator_ = std::move(separator);
  t.open_ = std::move(open);
  t.close_ = std::move(close);
  for (const std::u32string* s : {&t.separator_, &t.open_, &t.close_}) {
    t.reserved_.insert(s->begin(), s->end());
  }

  for (Entry& e : entries) {
    std::string where = "entry " + uni::to_utf8(std::u32string(1, e.cyr));
    if (!uni::is_cyrillic(e.cyr)) fail(where + ": key is not Cyrillic (" + describe_cp(e.cyr) + ")");
    if (uni::to_lower(e.cyr) != e.cyr) fail(where + ": key must be lowercase");
    if (e.out.empty()) fail(where + ": empty output");
    for (char32_t c : e.out) {
      if (uni::is_whitespace(c) || uni::is_nonprintable(c)) fail(where + ": whitespace in output");
      if (uni::is_cyrillic(c)) fail(where + ": Cyrillic in output");
      if (t.reserved_.count(c)) fail(where + ": reserved character in output");
      if (uni::to_lower(c) != c) fail(where + ": output must be lowercase");
    }
    // Case variants of the output must fold back to it, or the decoder could
    // not recognize what the encoder emits.
    if (uni::lower_copy(title_copy(e.out)) != e.out || uni::lower_copy(uni::upper_copy(e.out)) != e.out) {
      fail(where + ": output is not stable under case round-trip");
    }
    if (!t.by_key_.emplace(e.cyr, t.entries_.size()).second) fail(where + ": duplicate key");
    if (!t.by_output_.emplace(e.out, e.cyr).second) {
      fail(where + ": output collides with another entry");
    }
    t.output_chars_.insert(e.out.begin(), e.out.end());
    t.max_output_len_ = std::max(t.max_output_len_, e.out.size());
    t.entries_.push_back(std::move(e));
  }
  return t;
}

TranslitTable TranslitTable::load(std::istream& in, std::string_view name) {
  std::vector<Entry> entries;
  std::string raw;
  size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty() || raw[0] == '#') continue;
    size_t tab = raw.find('\t');
    if (tab == std::string::npos) table_error(name, lineno, "expected <char><TAB><output>");
    std::u32string key = uni::to_u32(raw.substr(0, tab));
    std::u32string out = uni::to_u32(raw.substr(tab + 1));
    if (key.size() != 1) table_error(name, lineno, "key must be a single character");
    if (out.empty()) table_error(name, lineno, "empty output");
    entries.push_back({key[0], std::move(out)});
  }
  try {
    return make(std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string(name) + ": " + e.what());
  }
}

TranslitTable TranslitTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open table file: " + path);
  return load(in, path);
}

void TranslitTable::save(std::ostream& out) const {
  for (const Entry& e : entries_) {
    out << uni::to_utf8(std::u32string(1, e.cyr)) << '\t' << uni::to_utf8(e.out) << '\n';
  }
}

const std::u32string* TranslitTable::lookup(char32_t lower_cyr) const {
  auto it = by_key_.find(lower_cyr);
  return it == by_key_.end() ? nullptr : &entries_[it->second].out;
}

char32_t TranslitTable::decode_lookup(const std::u32string& folded_out) const {
  auto it = by_output_.find(folded_out);
  return it == by_output_.end() ? 0 : it->second;
}

bool TranslitTable::covers(char32_t c) const {
  return by_key_.count(uni::to_lower(c)) != 0;
}

bool TranslitTable::has_caseless_output(char32_t c) const {
  const std::u32string* out = lookup(uni::to_lower(c));
  return out != nullptr && !has_cased_char(*out);
}

bool TranslitTable::needs_wrap(char32_t c) const {
  if (uni::is_latin(c)) return true;
  if (reserved_.count(c)) return true;
  if (uni::is_cyrillic(c)) return !covers(c);
  return output_chars_.count(c) != 0 || output_chars_.count(uni::to_lower(c)) != 0;
}

namespace {

enum class EmKind { kOutput, kPassthrough, kWrapped, kSeparator };

struct Emission {
  EmKind kind;
  std::u32string text;
  const std::u32string* folded = nullptr;  // table output, set for kOutput
};

// The letter keeps its lowercase form unless an uppercase Cyrillic letter
// precedes it and no lowercase Cyrillic letter or context-cased letter
// follows ("СІЛЬ" and "ЛЬВІВ" uppercase, "Сіль" and "Сьогодні" not). The
// decoder applies the same rule to reconstruct the case, so the encoder
// wraps the letter verbatim whenever the prediction misses.
bool context_wants_upper(const std::u32string& src, size_t i, const TranslitTable& t) {
  bool prev_upper = i > 0 && is_upper_cyrillic(src[i - 1]);
  bool next_blocks =
      i + 1 < src.size() &&
      ((uni::is_cyrillic(src[i + 1]) && uni::is_lower(src[i + 1])) ||
       t.has_caseless_output(src[i + 1]));
  return prev_upper && !next_blocks;
}

// Fills `em` for a convertible or passthrough character; returns false when
// the character must travel inside a delimited run instead.
bool plan_emission(const std::u32string& src, size_t i, const TranslitTable& t, Emission& em) {
  char32_t c = src[i];
  char32_t lc = uni::to_lower(c);
  if (const std::u32string* out = t.lookup(lc)) {
    if (!has_cased_char(*out)) {
      char32_t predicted = context_wants_upper(src, i, t) ? uni::to_upper(lc) : lc;
      if (predicted != c) return false;
      em = {EmKind::kOutput, *out, out};
      return true;
    }
    if (c == lc) {
      em = {EmKind::kOutput, *out, out};
      return true;
    }
    if (!uni::is_upper(c)) return false;
    bool all_caps = (i > 0 && is_upper_cyrillic(src[i - 1])) ||
                    (i + 1 < src.size() && is_upper_cyrillic(src[i + 1]));
    em = {EmKind::kOutput, all_caps ? uni::upper_copy(*out) : title_copy(*out), out};
    return true;
  }
  if (t.needs_wrap(c)) return false;
  em = {EmKind::kPassthrough, std::u32string(1, c), nullptr};
  return true;
}

}  // namespace

Line romanize(std::string_view line, const TranslitTable& t) {
  std::u32string src = uni::to_u32(line);
  std::vector<Emission> ems;
  ems.reserve(src.size());
  for (size_t i = 0; i < src.size(); ++i) {
    Emission em;
    if (plan_emission(src, i, t, em)) {
      ems.push_back(std::move(em));
    } else {
      ems.push_back({EmKind::kWrapped, std::u32string(1, src[i]), nullptr});
    }
  }

  // A separator goes after an output whenever greedy longest-match decoding,
  // aligned at its start, would consume past its end into later outputs.
  std::vector<Emission> placed;
  placed.reserve(ems.size());
  for (size_t i = 0; i < ems.size(); ++i) {
    placed.push_back(ems[i]);
    if (ems[i].kind != EmKind::kOutput) continue;
    const std::u32string& base = *ems[i].folded;
    if (base.size() >= t.max_output_len()) continue;
    std::u32string window;
    for (size_t j = i + 1; j < ems.size() && window.size() < t.max_output_len() - base.size();
         ++j) {
      if (ems[j].kind != EmKind::kOutput) break;
      window += *ems[j].folded;
    }
    bool merge_risk = false;
    std::u32string cand = base;
    for (size_t k = 0; k < window.size() && cand.size() < t.max_output_len(); ++k) {
      cand += window[k];
      if (t.decode_lookup(cand) != 0) {
        merge_risk = true;
        break;
      }
    }
    if (merge_risk) placed.push_back({EmKind::kSeparator, t.separator(), nullptr});
  }

  std::u32string out;
  size_t i = 0;
  while (i < placed.size()) {
    if (placed[i].kind == EmKind::kWrapped) {
      std::u32string inner;
      while (i < placed.size() && placed[i].kind == EmKind::kWrapped) {
        inner += placed[i].text;
        ++i;
      }
      // A literal close delimiter inside the run is doubled so the decoder
      // can tell it from the terminator.
      out += t.open_delim();
      size_t p = 0;
      while (true) {
        size_t hit = inner.find(t.close_delim(), p);
        if (hit == std::u32string::npos) {
          out.append(inner, p, std::u32string::npos);
          break;
        }
        out.append(inner, p, hit - p + t.close_delim().size());
        out += t.close_delim();
        p = hit + t.close_delim().size();
      }
      out += t.close_delim();
    } else {
      out += placed[i].text;
      ++i;
    }
  }
  return uni::to_utf8(out);
}

DeromanizeResult deromanize(std::string_view line, const TranslitTable& t) {
  std::u32string in = uni::to_u32(line);
  const std::u32string& sep = t.separator();
  const std::u32string& open = t.open_delim();
  const std::u32string& close = t.close_delim();
  auto at = [&](size_t pos, const std::u32string& s) {
    return pos <= in.size() && in.compare(pos, s.size(), s) == 0;
  };

  std::u32string out;
  std::vector<size_t> context_cased;
  TranslitError err = TranslitError::kOk;
  size_t i = 0;
  while (i < in.size()) {
    if (at(i, open)) {
      size_t p = i + open.size();
      bool closed = false;
      while (p < in.size()) {
        if (at(p, close)) {
          if (at(p + close.size(), close)) {
            out += close;
            p += 2 * close.size();
            continue;
          }
          closed = true;
          p += close.size();
          break;
        }
        out += in[p++];
      }
      if (!closed) err = TranslitError::kUnbalancedDelimiter;
      i = p;
      continue;
    }
    if (at(i, sep)) {
      i += sep.size();
      continue;
    }
    char32_t key = 0;
    size_t matched_len = 0;
    for (size_t len = std::min(t.max_output_len(), in.size() - i); len >= 1; --len) {
      if (char32_t k = t.decode_lookup(uni::lower_copy(std::u32string_view(in).substr(i, len)))) {
        key = k;
        matched_len = len;
        break;
      }
    }
    if (key == 0) {
      out += in[i++];  // digits, punctuation and unknown text pass through
      continue;
    }
    if (!has_cased_char(*t.lookup(key))) {
      context_cased.push_back(out.size());
      out += key;
    } else {
      bool upper = false;
      for (size_t k = i; k < i + matched_len; ++k) {
        if (uni::is_cased(in[k])) {
          upper = uni::is_upper(in[k]);
          break;
        }
      }
      out += upper ? uni::to_upper(key) : key;
    }
    i += matched_len;
  }

  // Same context rule as the encoder, applied left to right so an already
  // resolved letter feeds the decision for the next one.
  for (size_t idx : context_cased) {
    bool prev_upper = idx > 0 && is_upper_cyrillic(out[idx - 1]);
    bool next_blocks = idx + 1 < out.size() &&
                       ((uni::is_cyrillic(out[idx + 1]) && uni::is_lower(out[idx + 1])) ||
                        t.has_caseless_output(out[idx + 1]));
    if (prev_upper && !next_blocks) out[idx] = uni::to_upper(out[idx]);
  }
  return {uni::to_utf8(out), err};
}

}  // namespace ukcs
