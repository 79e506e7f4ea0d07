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

#include "ukcs/filter.h"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ukcs/unicode.h"

namespace ukcs {

namespace {

[[noreturn]] void fail(std::string_view name, size_t lineno, const std::string& what) {
  std::ostringstream os;
  os << name << ":" << lineno << ": " << what;
  throw std::runtime_error(os.str());
}

std::regex compile(std::string_view name, size_t lineno, const std::string& pattern) {
  try {
    return std::regex(pattern, std::regex::ECMAScript | std::regex::optimize);
  } catch (const std::regex_error& e) {
    fail(name, lineno, "bad pattern \"" + pattern + "\": " + e.what());
  }
}

bool all_whitespace(std::string_view line) {
  size_t pos = 0;
  while (pos < line.size()) {
    if (!uni::is_whitespace(uni::decode_utf8(line, pos))) return false;
  }
  return true;
}

bool has_cyrillic(std::string_view text) {
  size_t pos = 0;
  while (pos < text.size()) {
    if (uni::is_cyrillic(uni::decode_utf8(text, pos))) return true;
  }
  return false;
}

bool matches(const std::string& text, const std::regex& re) {
  return std::regex_search(text, re);
}

bool contains_any(const std::string& folded, const std::vector<std::string>& forms) {
  for (const auto& f : forms) {
    if (folded.find(f) != std::string::npos) return true;
  }
  return false;
}

}  // namespace

void FilterConfig::validate() const {
  if (!(ratio_min > 0.0) || !(ratio_max >= ratio_min)) {
    throw std::invalid_argument("filter: need 0 < ratio_min <= ratio_max");
  }
  if (langid_threshold < 0.0 || langid_threshold > 1.0) {
    throw std::invalid_argument("filter: langid_threshold outside [0, 1]");
  }
  if (mono_max_chars_uk == 0 || mono_max_chars_cs == 0) {
    throw std::invalid_argument("filter: mono length caps must be positive");
  }
}

RuleSet RuleSet::load(std::istream& in, std::string_view name) {
  RuleSet rs;
  std::string raw;
  size_t lineno = 0;
  bool in_block = false;
  Rule rule;
  size_t rule_line = 0;
  std::string pattern, pattern_src, pattern_tgt;
  bool have_side = false, have_action = false;

  auto finish_block = [&]() {
    if (rule.name.empty()) fail(name, rule_line, "rule without a name");
    for (const auto& r : rs.rules_) {
      if (r.name == rule.name) fail(name, rule_line, "duplicate rule \"" + rule.name + "\"");
    }
    if (!have_side) fail(name, rule_line, "rule \"" + rule.name + "\" missing side");
    if (!have_action) fail(name, rule_line, "rule \"" + rule.name + "\" missing action");
    if (rule.side == RuleSide::kAsymmetric) {
      if (pattern_src.empty() || pattern_tgt.empty() || !pattern.empty()) {
        fail(name, rule_line,
             "asymmetric rule \"" + rule.name + "\" needs pattern-src and pattern-tgt");
      }
    } else {
      if (pattern.empty() || !pattern_src.empty() || !pattern_tgt.empty()) {
        fail(name, rule_line, "rule \"" + rule.name + "\" needs a single pattern");
      }
      pattern_src = pattern;
      pattern_tgt = pattern;
    }
    if (rule.side != RuleSide::kTgt) {
      rule.pattern_src = pattern_src;
      rule.re_src = compile(name, rule_line, pattern_src);
    }
    if (rule.side != RuleSide::kSrc) {
      rule.pattern_tgt = pattern_tgt;
      rule.re_tgt = compile(name, rule_line, pattern_tgt);
    }
    rs.rules_.push_back(std::move(rule));
  };

  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string line = raw;
    size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    size_t stop = line.find_last_not_of(" \t");
    line = line.substr(start, stop - start + 1);
    if (line[0] == '#') continue;

    size_t sp = line.find(' ');
    std::string key = line.substr(0, sp);
    std::string value = sp == std::string::npos ? "" : line.substr(sp + 1);

    if (key == "rule") {
      if (in_block) fail(name, lineno, "rule block not closed with end");
      if (value.empty()) fail(name, lineno, "rule without a name");
      in_block = true;
      rule = Rule{};
      rule.name = value;
      rule_line = lineno;
      pattern.clear();
      pattern_src.clear();
      pattern_tgt.clear();
      have_side = have_action = false;
      continue;
    }
    if (!in_block) fail(name, lineno, "\"" + key + "\" outside a rule block");
    if (key == "side") {
      if (value == "src") rule.side = RuleSide::kSrc;
      else if (value == "tgt") rule.side = RuleSide::kTgt;
      else if (value == "both") rule.side = RuleSide::kBoth;
      else if (value == "asymmetric") rule.side = RuleSide::kAsymmetric;
      else fail(name, lineno, "unknown side \"" + value + "\"");
      have_side = true;
    } else if (key == "pattern") {
      pattern = value;
    } else if (key == "pattern-src") {
      pattern_src = value;
    } else if (key == "pattern-tgt") {
      pattern_tgt = value;
    } else if (key == "action") {
      if (value == "reject-if-either-matches") {
        rule.action = RuleAction::kRejectIfEitherMatches;
      } else if (value == "reject-if-exactly-one-matches") {
        rule.action = RuleAction::kRejectIfExactlyOneMatches;
      } else {
        fail(name, lineno, "unknown action \"" + value + "\"");
      }
      have_action = true;
    } else if (key == "end") {
      finish_block();
      in_block = false;
    } else {
      fail(name, lineno, "unknown key \"" + key + "\"");
    }
  }
  if (in_block) fail(name, lineno, "unterminated rule block");
  return rs;
}

RuleSet RuleSet::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open rule file: " + path);
  return load(in, path);
}

void RuleSet::add_lexicon(std::istream& in, std::string_view name) {
  std::string raw;
  size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty() || raw[0] == '#') continue;
    std::vector<std::string> fields;
    size_t pos = 0;
    while (true) {
      size_t tab = raw.find('\t', pos);
      fields.push_back(raw.substr(pos, tab - pos));
      if (tab == std::string::npos) break;
      pos = tab + 1;
    }
    if (fields.size() < 2 || fields.size() > 3 || fields[0].empty() || fields[1].empty()) {
      fail(name, lineno, "expected cs_term<TAB>uk_term[<TAB>alt,...]");
    }
    LexiconEntry entry;
    entry.cs_term = fields[0];
    entry.uk_term = fields[1];
    entry.cs_forms.push_back(uni::lower_copy_utf8(fields[0]));
    entry.uk_forms.push_back(uni::lower_copy_utf8(fields[1]));
    if (fields.size() == 3) {
      std::istringstream alts(fields[2]);
      std::string alt;
      while (std::getline(alts, alt, ',')) {
        if (alt.empty()) fail(name, lineno, "empty alternate form");
        auto& side = has_cyrillic(alt) ? entry.uk_forms : entry.cs_forms;
        side.push_back(uni::lower_copy_utf8(alt));
      }
    }
    lexicon_.push_back(std::move(entry));
  }
}

void RuleSet::add_lexicon_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lexicon file: " + path);
  add_lexicon(in, path);
}

Detector make_detector(const LangIdModel& model) {
  return [&model](std::string_view line) { return model.detect(line); };
}

bool length_ratio_ok(const Line& src, const Line& tgt, const FilterConfig& cfg) {
  size_t ls = uni::length(src);
  size_t lt = uni::length(tgt);
  if (std::min(ls, lt) <= cfg.ratio_min_length_chars) return true;
  double ratio = static_cast<double>(ls) / static_cast<double>(lt);
  return ratio >= cfg.ratio_min && ratio <= cfg.ratio_max;
}

FilterDecision check_rules(const PairRecord& pair, const RuleSet& rules) {
  for (const auto& rule : rules.rules()) {
    bool on_src = rule.side != RuleSide::kTgt;
    bool on_tgt = rule.side != RuleSide::kSrc;
    bool ms = on_src && matches(pair.src, rule.re_src);
    bool mt = on_tgt && matches(pair.tgt, rule.re_tgt);
    bool fired = rule.action == RuleAction::kRejectIfEitherMatches ? (ms || mt)
                                                                   : (ms != mt);
    if (fired) return FilterDecision::reject(rule.name);
  }
  if (!rules.lexicon().empty()) {
    std::string folded_src = uni::lower_copy_utf8(pair.src);
    std::string folded_tgt = uni::lower_copy_utf8(pair.tgt);
    for (const auto& entry : rules.lexicon()) {
      bool hs = contains_any(folded_src, entry.cs_forms);
      bool ht = contains_any(folded_tgt, entry.uk_forms);
      if (hs != ht) return FilterDecision::reject(std::string(kLexiconReason));
    }
  }
  return FilterDecision::keep();
}

FilterDecision filter_pair(const PairRecord& pair, const FilterConfig& cfg,
                           const Detector& detector, const RuleSet& rules) {
  DecodeOptions field{.keep_tab = false};
  if (!is_clean(pair.src, field) || !is_clean(pair.tgt, field)) {
    return FilterDecision::reject("printability");
  }
  bool exempt = cfg.exempt_corpora.count(pair.corpus_tag) > 0;
  if (!exempt && detector) {
    auto ds = detector(pair.src);
    if (!ds || ds->lang != "cs" || ds->confidence < cfg.langid_threshold) {
      return FilterDecision::reject("langid-src");
    }
    auto dt = detector(pair.tgt);
    if (!dt || dt->lang != "uk" || dt->confidence < cfg.langid_threshold) {
      return FilterDecision::reject("langid-tgt");
    }
  }
  if (!exempt && !length_ratio_ok(pair.src, pair.tgt, cfg)) {
    return FilterDecision::reject("ratio");
  }
  return check_rules(pair, rules);
}

FilterDecision filter_mono(const Line& line, MonoLang lang, const FilterConfig& cfg) {
  if (line.empty() || all_whitespace(line)) return FilterDecision::reject("empty");
  size_t n = uni::length(line);
  bool ok = lang == MonoLang::kUk ? n < cfg.mono_max_chars_uk
                                  : n <= cfg.mono_max_chars_cs;
  return ok ? FilterDecision::keep() : FilterDecision::reject("mono-maxlen");
}

void FilterStats::count(const FilterDecision& d) {
  ++total;
  if (d.kept) {
    ++kept;
  } else {
    ++rejected[d.reason];
  }
}

void FilterStats::merge(const FilterStats& other) {
  total += other.total;
  kept += other.kept;
  for (const auto& [reason, n] : other.rejected) rejected[reason] += n;
}

uint64_t FilterStats::rejected_total() const {
  uint64_t sum = 0;
  for (const auto& [reason, n] : rejected) sum += n;
  return sum;
}

FilterDecision filter_bitext_line(std::string_view raw, const FilterConfig& cfg,
                                  const Detector& detector, const RuleSet& rules,
                                  const std::string& corpus_tag,
                                  std::string* cleaned) {
  size_t tab = raw.find('\t');
  if (tab == std::string_view::npos) return FilterDecision::reject("format");
  DecodeOptions field{.keep_tab = false};
  auto src = decode_bytes(raw.substr(0, tab), field);
  auto tgt = decode_bytes(raw.substr(tab + 1), field);
  if (!src || !tgt) return FilterDecision::reject("printability");
  PairRecord pair{std::move(src->text), std::move(tgt->text), corpus_tag};
  FilterDecision d = filter_pair(pair, cfg, detector, rules);
  if (d.kept && cleaned) *cleaned = pair.src + '\t' + pair.tgt;
  return d;
}

FilterStats run_pipeline(std::istream& in, std::ostream& out,
                         const FilterConfig& cfg, const Detector& detector,
                         const RuleSet& rules, const PipelineOptions& opts) {
  cfg.validate();
  FilterStats stats;
  std::string raw;
  size_t record = 0;
  while (std::getline(in, raw)) {
    ++record;
    std::string cleaned;
    FilterDecision d =
        filter_bitext_line(raw, cfg, detector, rules, opts.corpus_tag, &cleaned);
    if (!d.kept && d.reason == "format" && opts.strict) {
      throw std::runtime_error("bitext record " + std::to_string(record) +
                               ": missing tab separator");
    }
    stats.count(d);
    if (d.kept) out << cleaned << '\n';
  }
  return stats;
}

}  // namespace ukcs
