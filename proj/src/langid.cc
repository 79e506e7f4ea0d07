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

#include "ukcs/langid.h"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "ukcs/unicode.h"

namespace ukcs {
namespace {

void push_word_ngrams(const std::u32string& word, std::vector<std::string>& out) {
  std::u32string padded;
  padded.reserve(word.size() + 2);
  padded += U'_';
  padded += word;
  padded += U'_';
  for (size_t n = 1; n <= 3; ++n) {
    if (padded.size() < n) break;
    for (size_t i = 0; i + n <= padded.size(); ++i) {
      out.push_back(uni::to_utf8(padded.substr(i, n)));
    }
  }
}

// Ranked list: count descending, then lexicographic, cut to k.
std::vector<std::string> rank_grams(
    const std::unordered_map<std::string, uint64_t>& counts, int k) {
  std::vector<std::pair<std::string, uint64_t>> items(counts.begin(), counts.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (items.size() > static_cast<size_t>(k)) items.resize(k);
  std::vector<std::string> grams;
  grams.reserve(items.size());
  for (auto& [gram, count] : items) grams.push_back(std::move(gram));
  return grams;
}

ScriptClass script_of_grams(const std::vector<std::string>& grams) {
  size_t latin = 0, cyrillic = 0;
  for (const std::string& g : grams) {
    std::u32string u = uni::to_u32(g);
    if (u.size() != 1 || !uni::is_letter(u[0])) continue;
    if (uni::is_latin(u[0])) ++latin;
    if (uni::is_cyrillic(u[0])) ++cyrillic;
  }
  if (cyrillic > latin) return ScriptClass::kCyrillic;
  if (latin > cyrillic) return ScriptClass::kLatin;
  return ScriptClass::kOther;
}

void index_profile(LangProfile& p) {
  p.rank.reserve(p.grams.size());
  for (size_t i = 0; i < p.grams.size(); ++i) {
    p.rank.emplace(p.grams[i], static_cast<int>(i));
  }
  p.script = script_of_grams(p.grams);
}

}  // namespace

std::vector<std::string> extract_ngrams(std::string_view line) {
  std::vector<std::string> out;
  std::u32string word;
  for (char32_t c : uni::to_u32(line)) {
    if (uni::is_letter(c)) {
      word += uni::to_lower(c);
    } else if (!word.empty()) {
      push_word_ngrams(word, out);
      word.clear();
    }
  }
  if (!word.empty()) push_word_ngrams(word, out);
  return out;
}

LangIdModel LangIdModel::train(const std::map<std::string, std::vector<Line>>& samples,
                               int k) {
  if (samples.size() < 2) {
    throw std::invalid_argument("langid model needs at least two languages");
  }
  if (k < 1) throw std::invalid_argument("langid k must be positive");
  LangIdModel m;
  m.k_ = k;
  for (const auto& [lang, lines] : samples) {
    std::unordered_map<std::string, uint64_t> counts;
    for (const Line& line : lines) {
      for (std::string& g : extract_ngrams(line)) counts[std::move(g)] += 1;
    }
    if (counts.empty()) {
      throw std::invalid_argument("empty sample for language " + lang);
    }
    LangProfile p;
    p.lang = lang;
    p.grams = rank_grams(counts, k);
    index_profile(p);
    m.profiles_.push_back(std::move(p));
  }
  return m;
}

const LangProfile* LangIdModel::profile(std::string_view lang) const {
  for (const LangProfile& p : profiles_) {
    if (p.lang == lang) return &p;
  }
  return nullptr;
}

std::optional<Detection> LangIdModel::detect(std::string_view line) const {
  bool any_letter = false, latin = false, cyrillic = false;
  for (char32_t c : uni::to_u32(line)) {
    if (!uni::is_letter(c)) continue;
    any_letter = true;
    latin = latin || uni::is_latin(c);
    cyrillic = cyrillic || uni::is_cyrillic(c);
  }
  if (!any_letter) return std::nullopt;

  std::vector<const LangProfile*> candidates;
  if (latin != cyrillic) {
    ScriptClass wanted = latin ? ScriptClass::kLatin : ScriptClass::kCyrillic;
    for (const LangProfile& p : profiles_) {
      if (p.script == wanted) candidates.push_back(&p);
    }
  }
  if (candidates.empty()) {
    for (const LangProfile& p : profiles_) candidates.push_back(&p);
  }
  if (candidates.size() == 1) return Detection{candidates[0]->lang, 1.0};

  std::unordered_map<std::string, uint64_t> counts;
  for (std::string& g : extract_ngrams(line)) counts[std::move(g)] += 1;
  std::vector<std::string> line_grams = rank_grams(counts, k_);

  std::vector<std::pair<uint64_t, const LangProfile*>> scored;
  scored.reserve(candidates.size());
  for (const LangProfile* p : candidates) {
    uint64_t d = 0;
    for (size_t i = 0; i < line_grams.size(); ++i) {
      auto it = p->rank.find(line_grams[i]);
      if (it == p->rank.end()) {
        d += k_;
      } else {
        d += static_cast<uint64_t>(
            std::abs(static_cast<int64_t>(i) - static_cast<int64_t>(it->second)));
      }
    }
    scored.emplace_back(d, p);
  }
  // Ties go to the lexicographically smallest language code.
  size_t best = 0;
  for (size_t i = 1; i < scored.size(); ++i) {
    if (scored[i].first < scored[best].first ||
        (scored[i].first == scored[best].first &&
         scored[i].second->lang < scored[best].second->lang)) {
      best = i;
    }
  }
  uint64_t second_d = UINT64_MAX;
  for (size_t i = 0; i < scored.size(); ++i) {
    if (i != best) second_d = std::min(second_d, scored[i].first);
  }
  double confidence = 0.0;
  if (second_d > 0) {
    confidence = static_cast<double>(second_d - scored[best].first) /
                 static_cast<double>(second_d);
  }
  return Detection{scored[best].second->lang, confidence};
}

void LangIdModel::save(std::ostream& out) const {
  out << "ukcs-langid 1\n";
  out << "k " << k_ << "\n";
  out << "langs " << profiles_.size() << "\n";
  for (const LangProfile& p : profiles_) {
    out << "lang " << p.lang << " " << p.grams.size() << "\n";
    for (const std::string& g : p.grams) out << g << "\n";
  }
}

void LangIdModel::save_file(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write model file: " + path);
  save(out);
}

LangIdModel LangIdModel::load(std::istream& in, std::string_view name) {
  size_t lineno = 0;
  auto fail = [&](const std::string& msg) -> void {
    std::ostringstream os;
    os << name << ":" << lineno << ": " << msg;
    throw std::runtime_error(os.str());
  };
  auto next_line = [&](std::string& raw) {
    if (!std::getline(in, raw)) fail("unexpected end of model file");
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
  };

  std::string raw;
  next_line(raw);
  if (raw != "ukcs-langid 1") fail("bad magic, expected 'ukcs-langid 1'");
  LangIdModel m;
  size_t nlangs = 0;
  {
    next_line(raw);
    std::istringstream is(raw);
    std::string key;
    if (!(is >> key >> m.k_) || key != "k" || m.k_ < 1) fail("bad k line");
    next_line(raw);
    std::istringstream is2(raw);
    if (!(is2 >> key >> nlangs) || key != "langs" || nlangs < 2) fail("bad langs line");
  }
  for (size_t i = 0; i < nlangs; ++i) {
    next_line(raw);
    std::istringstream is(raw);
    std::string key;
    LangProfile p;
    size_t ngrams = 0;
    if (!(is >> key >> p.lang >> ngrams) || key != "lang") fail("bad lang header");
    if (ngrams > static_cast<size_t>(m.k_)) fail("profile larger than k");
    if (m.profile(p.lang) != nullptr) fail("duplicate language " + p.lang);
    p.grams.reserve(ngrams);
    for (size_t g = 0; g < ngrams; ++g) {
      next_line(raw);
      if (raw.empty()) fail("empty gram");
      p.grams.push_back(raw);
    }
    index_profile(p);
    if (p.rank.size() != p.grams.size()) fail("duplicate gram in " + p.lang);
    m.profiles_.push_back(std::move(p));
  }
  return m;
}

LangIdModel LangIdModel::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open model file: " + path);
  return load(in, path);
}

}  // namespace ukcs
