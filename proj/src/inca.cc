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

#include "ukcs/inca.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ukcs/unicode.h"

namespace ukcs {
namespace {

bool is_tag_literal(std::string_view body) {
  return body == IncaTags::kTitle || body == IncaTags::kUpper ||
         body == IncaTags::kLower || body == IncaTags::kEsc;
}

bool contains_upper(std::string_view body) {
  for (char32_t c : uni::to_u32(body)) {
    if (uni::is_upper(c)) return true;
  }
  return false;
}

std::string title_copy_utf8(std::string_view lower_body) {
  std::u32string u = uni::to_u32(lower_body);
  for (char32_t& c : u) {
    if (uni::is_cased(c)) {
      c = uni::to_title(c);
      break;
    }
  }
  return uni::to_utf8(u);
}

std::string apply_pattern(CasingPattern p, std::string_view lower_body) {
  switch (p) {
    case CasingPattern::kTitle:
      return title_copy_utf8(lower_body);
    case CasingPattern::kUpper:
      return uni::upper_copy_utf8(lower_body);
    default:
      return std::string(lower_body);
  }
}

std::string_view tag_for(CasingPattern p) {
  switch (p) {
    case CasingPattern::kTitle:
      return IncaTags::kTitle;
    case CasingPattern::kUpper:
      return IncaTags::kUpper;
    default:
      return IncaTags::kLower;
  }
}

}  // namespace

CasingVocabulary CasingVocabulary::merge(const CasingVocabulary& a, const CasingVocabulary& b) {
  CasingVocabulary out = a;
  for (const auto& [key, entry] : b.entries_) {
    auto [it, inserted] = out.entries_.emplace(key, entry);
    if (inserted) continue;
    Entry& mine = it->second;
    if (mine.variant == entry.variant) {
      mine.count += entry.count;
    } else if (entry.count > mine.count ||
               (entry.count == mine.count && entry.variant < mine.variant)) {
      mine = entry;
    }
  }
  out.min_count = std::min(a.min_count, b.min_count);
  if (a.source != b.source && !b.source.empty()) {
    out.source = a.source.empty() ? b.source : a.source + "+" + b.source;
  }
  return out;
}

CasingVocabulary CasingVocabulary::load(std::istream& in, std::string_view name) {
  CasingVocabulary v;
  std::string raw;
  size_t lineno = 0;
  auto fail = [&](const std::string& msg) {
    std::ostringstream os;
    os << name << ":" << lineno << ": " << msg;
    throw std::runtime_error(os.str());
  };
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty()) continue;
    size_t tab = raw.find('\t');
    if (tab == std::string::npos) fail("expected <variant><TAB><count>");
    std::string variant = raw.substr(0, tab);
    std::string digits = raw.substr(tab + 1);
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos) {
      fail("bad count");
    }
    uint64_t count = 0;
    try {
      count = std::stoull(digits);
    } catch (const std::out_of_range&) {
      fail("count out of range");
    }
    std::string key = uni::lower_copy_utf8(variant);
    if (key == variant) fail("variant equals its lowercase form");
    if (!v.entries_.emplace(key, Entry{std::move(variant), count}).second) {
      fail("duplicate key " + key);
    }
  }
  return v;
}

CasingVocabulary CasingVocabulary::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open vocabulary file: " + path);
  return load(in, path);
}

void CasingVocabulary::save(std::ostream& out) const {
  for (const auto& [key, entry] : entries_) {
    out << entry.variant << '\t' << entry.count << '\n';
  }
}

void CasingVocabulary::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write vocabulary file: " + path);
  save(out);
}

const CasingVocabulary::Entry* CasingVocabulary::find(const std::string& key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

void VocabTrainer::add_line(std::string_view line) {
  ++lines_seen_;
  TokenizedText t = tokenize(line);
  for (const Token& tok : t.tokens) {
    if (classify_casing(tok.body) == CasingPattern::kNoCase) continue;
    counts_[uni::lower_copy_utf8(tok.body)][tok.body] += 1;
  }
}

void VocabTrainer::absorb(VocabTrainer&& other) {
  lines_seen_ += other.lines_seen_;
  for (auto& [key, variants] : other.counts_) {
    auto& mine = counts_[key];
    for (auto& [variant, n] : variants) mine[variant] += n;
  }
  other.counts_.clear();
  other.lines_seen_ = 0;
}

CasingVocabulary VocabTrainer::finish(uint64_t min_count, std::string source) const {
  CasingVocabulary v;
  v.min_count = min_count;
  v.source = std::move(source);
  for (const auto& [key, variants] : counts_) {
    uint64_t total = 0;
    for (const auto& [variant, n] : variants) total += n;
    if (total < min_count) continue;
    const std::string* best = nullptr;
    uint64_t best_count = 0;
    for (const auto& [variant, n] : variants) {
      bool wins = best == nullptr || n > best_count;
      if (!wins && n == best_count) {
        // Tie: plain lowercase first, then lexicographic order.
        if (variant == key) {
          wins = *best != key;
        } else {
          wins = *best != key && variant < *best;
        }
      }
      if (wins) {
        best = &variant;
        best_count = n;
      }
    }
    if (best == nullptr || *best == key) continue;
    v.entries_.emplace(key, CasingVocabulary::Entry{*best, best_count});
  }
  return v;
}

Line inca_encode(std::string_view line, const CasingVocabulary& vocab) {
  TokenizedText in = tokenize(line);
  TokenizedText out;
  out.trailing = in.trailing;
  // A tag inherits the token's leading whitespace and the token itself gets a
  // single space, so decoding can restore the original layout.
  auto emit_tagged = [&out](std::string_view tag, std::string ws, std::string body) {
    out.tokens.push_back({std::move(ws), std::string(tag)});
    out.tokens.push_back({" ", std::move(body)});
  };
  for (Token& tok : in.tokens) {
    CasingPattern pattern = classify_casing(tok.body);
    std::string lower = uni::lower_copy_utf8(tok.body);
    const CasingVocabulary::Entry* entry = vocab.find(lower);
    const std::string& mfv = entry != nullptr ? entry->variant : lower;
    if (pattern == CasingPattern::kNoCase) {
      out.tokens.push_back(std::move(tok));  // tag literals have cased letters
    } else if (tok.body == mfv && !is_tag_literal(lower)) {
      out.tokens.push_back({std::move(tok.ws), std::move(lower)});
    } else if (tok.body == mfv) {
      emit_tagged(IncaTags::kEsc, std::move(tok.ws), std::move(lower));
    } else if (pattern == CasingPattern::kIrregular ||
               apply_pattern(pattern, lower) != tok.body) {
      // Verbatim: either irregular by pattern, or a token whose casing a tag
      // could not rebuild (e.g. titlecase codepoints with no simple mapping).
      out.tokens.push_back(std::move(tok));
    } else {
      emit_tagged(tag_for(pattern), std::move(tok.ws), std::move(lower));
    }
  }
  return out.detokenize();
}

IncaDecodeResult inca_decode(std::string_view line, const CasingVocabulary& vocab) {
  TokenizedText in = tokenize(line);
  TokenizedText out;
  out.trailing = in.trailing;
  IncaError err = IncaError::kOk;

  auto resolve_untagged = [&vocab](std::string&& body) {
    if (contains_upper(body)) return std::move(body);  // verbatim irregular
    const CasingVocabulary::Entry* entry = vocab.find(body);
    return entry != nullptr ? std::string(entry->variant) : std::move(body);
  };

  for (size_t i = 0; i < in.tokens.size(); ++i) {
    Token& tok = in.tokens[i];
    if (tok.body == IncaTags::kEsc) {
      if (i + 1 >= in.tokens.size()) {
        err = IncaError::kDanglingTag;
        break;
      }
      out.tokens.push_back({std::move(tok.ws), resolve_untagged(std::move(in.tokens[i + 1].body))});
      ++i;
      continue;
    }
    if (is_tag_literal(tok.body)) {
      if (i + 1 >= in.tokens.size()) {
        err = IncaError::kDanglingTag;
        break;
      }
      CasingPattern p = tok.body == IncaTags::kTitle   ? CasingPattern::kTitle
                        : tok.body == IncaTags::kUpper ? CasingPattern::kUpper
                                                       : CasingPattern::kLower;
      out.tokens.push_back({std::move(tok.ws), apply_pattern(p, in.tokens[i + 1].body)});
      ++i;
      continue;
    }
    out.tokens.push_back({std::move(tok.ws), resolve_untagged(std::move(tok.body))});
  }
  return {out.detokenize(), err};
}

}  // namespace ukcs
