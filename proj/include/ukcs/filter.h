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

#ifndef UKCS_FILTER_H_
#define UKCS_FILTER_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "ukcs/langid.h"
#include "ukcs/textmodel.h"

// Rule-based cleaning of parallel and monolingual corpora. A pair passes
// four steps in order: printability, language identification, character
// length ratio, hand-crafted rules (regex mismatch checks plus a
// municipality co-translation lexicon). Corpora listed as exempt (XLEnt by
// default, being short aligned phrases) skip the language and ratio steps.
// Every rejection carries the name of the step or rule that fired, so the
// statistics reconstruct a before/after accounting per reason.
namespace ukcs {

struct PairRecord {
  Line src;  // Czech side
  Line tgt;  // Ukrainian side
  std::string corpus_tag;
};

struct FilterConfig {
  double ratio_min = 0.67;
  double ratio_max = 1.5;
  size_t ratio_min_length_chars = 10;  // ratio applies only above this, both sides
  size_t mono_max_chars_uk = 300;      // strictly shorter
  size_t mono_max_chars_cs = 1400;     // up to, inclusive
  std::set<std::string> exempt_corpora = {"XLEnt"};
  double langid_threshold = 0.5;

  void validate() const;  // throws std::invalid_argument
};

struct FilterDecision {
  bool kept = true;
  std::string reason;  // set when rejected

  static FilterDecision keep() { return {}; }
  static FilterDecision reject(std::string why) { return {false, std::move(why)}; }
};

enum class RuleSide { kSrc, kTgt, kBoth, kAsymmetric };
enum class RuleAction { kRejectIfEitherMatches, kRejectIfExactlyOneMatches };

struct Rule {
  std::string name;
  RuleSide side = RuleSide::kBoth;
  RuleAction action = RuleAction::kRejectIfEitherMatches;
  std::string pattern_src, pattern_tgt;  // source text of the regexes
  std::regex re_src, re_tgt;
};

struct LexiconEntry {
  std::string cs_term, uk_term;
  // Case-folded accepted forms per side (the terms included).
  std::vector<std::string> cs_forms, uk_forms;
};

inline constexpr std::string_view kLexiconReason = "municipality-lexicon";

// Rule file: blocks of
//   rule <name>
//   side src|tgt|both|asymmetric
//   pattern <regex>            (src, tgt, both)
//   pattern-src <regex>        (asymmetric)
//   pattern-tgt <regex>
//   action reject-if-either-matches|reject-if-exactly-one-matches
//   end
// `#` comments and blank lines between blocks. Patterns are byte-level
// ECMAScript regexes; non-ASCII text is safe as a literal, not in classes.
// Lexicon file: `cs_term<TAB>uk_term[<TAB>alt,alt,…]`; alternates are sorted
// to a side by their script.
class RuleSet {
 public:
  RuleSet() = default;

  static RuleSet load(std::istream& in, std::string_view name = "<rules>");
  static RuleSet load_file(const std::string& path);
  void add_lexicon(std::istream& in, std::string_view name = "<lexicon>");
  void add_lexicon_file(const std::string& path);

  const std::vector<Rule>& rules() const { return rules_; }
  const std::vector<LexiconEntry>& lexicon() const { return lexicon_; }
  bool empty() const { return rules_.empty() && lexicon_.empty(); }

 private:
  std::vector<Rule> rules_;
  std::vector<LexiconEntry> lexicon_;
};

// Empty function disables the language step.
using Detector = std::function<std::optional<Detection>(std::string_view)>;

// Makes a Detector out of a trained model; the model must outlive it.
Detector make_detector(const LangIdModel& model);

bool length_ratio_ok(const Line& src, const Line& tgt, const FilterConfig& cfg);

FilterDecision check_rules(const PairRecord& pair, const RuleSet& rules);

FilterDecision filter_pair(const PairRecord& pair, const FilterConfig& cfg,
                           const Detector& detector, const RuleSet& rules);

enum class MonoLang { kCs, kUk };

FilterDecision filter_mono(const Line& line, MonoLang lang, const FilterConfig& cfg);

// One wire record (`src<TAB>tgt` bytes) through ingestion and filter_pair.
// Reason "format" marks a record without a tab; sides empty after byte
// cleaning reject as "printability". On Kept, *cleaned receives the output
// line without a newline.
FilterDecision filter_bitext_line(std::string_view raw, const FilterConfig& cfg,
                                  const Detector& detector, const RuleSet& rules,
                                  const std::string& corpus_tag,
                                  std::string* cleaned);

struct FilterStats {
  uint64_t total = 0;
  uint64_t kept = 0;
  std::map<std::string, uint64_t> rejected;

  void count(const FilterDecision& d);
  void merge(const FilterStats& other);
  uint64_t rejected_total() const;
};

struct PipelineOptions {
  std::string corpus_tag;
  // Strict mode throws on a malformed record (missing tab); otherwise the
  // record is counted under reason "format" and skipped.
  bool strict = true;
};

// Reads `src<TAB>tgt` lines, writes kept pairs in input order. Sides are
// byte-cleaned at ingestion; pairs empty after cleaning count as
// "printability".
FilterStats run_pipeline(std::istream& in, std::ostream& out,
                         const FilterConfig& cfg, const Detector& detector,
                         const RuleSet& rules, const PipelineOptions& opts);

}  // namespace ukcs

#endif  // UKCS_FILTER_H_
