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

#ifndef UKCS_INCA_H_
#define UKCS_INCA_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>

#include "ukcs/textmodel.h"

// Inline casing (InCa): lowercase the text and insert casing tags so the
// original casing can be reconstructed. A trained vocabulary remembers the
// most frequent casing variant of each word, so that variant needs no tag:
//
//   "My iPhone 64GB and iPod 64 GB or 32 gb"
//     -> "<titlecase> my iphone <all-uppercase> 64gb and iPod 64 gb
//         or 32 <all-lowercase> gb"        (vocabulary: iPhone, GB)
namespace ukcs {

struct IncaTags {
  static constexpr std::string_view kTitle = "<titlecase>";
  static constexpr std::string_view kUpper = "<all-uppercase>";
  static constexpr std::string_view kLower = "<all-lowercase>";
  // Artifact-defined: protects literal occurrences of the tag strings.
  static constexpr std::string_view kEsc = "<inca-esc>";
};

class CasingVocabulary {
 public:
  struct Entry {
    std::string variant;  // exact-cased form; lowercase(variant) is the key
    uint64_t count = 0;
  };

  CasingVocabulary() = default;

  // Wins by count; identical variants have their counts summed, and a count
  // tie between different variants goes to the lexicographically smaller.
  static CasingVocabulary merge(const CasingVocabulary& a, const CasingVocabulary& b);

  // One `<variant><TAB><count>` entry per line, sorted by key. Variants equal
  // to their own lowercase form are rejected (they would never be used).
  static CasingVocabulary load(std::istream& in, std::string_view name = "<vocab>");
  static CasingVocabulary load_file(const std::string& path);
  void save(std::ostream& out) const;
  void save_file(const std::string& path) const;

  // Most frequent variant for a lowercased key, or null.
  const Entry* find(const std::string& key) const;
  size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::map<std::string, Entry>& entries() const { return entries_; }

  uint64_t min_count = 0;  // threshold the vocabulary was trained with
  std::string source;      // free-form descriptor, e.g. "authentic"

 private:
  friend class VocabTrainer;
  std::map<std::string, Entry> entries_;
};

// Accumulates casing-variant counts line by line; order-independent. Counts
// from several trainers can be merged to parallelize, the result matches the
// sequential count exactly.
class VocabTrainer {
 public:
  void add_line(std::string_view line);
  void absorb(VocabTrainer&& other);
  uint64_t lines_seen() const { return lines_seen_; }

  // Keys whose total count reaches min_count keep their most frequent
  // non-NoCase variant; ties prefer the plain lowercase form, then the
  // lexicographically smallest. Lowercase winners are omitted.
  CasingVocabulary finish(uint64_t min_count, std::string source = "") const;

 private:
  std::unordered_map<std::string, std::unordered_map<std::string, uint64_t>> counts_;
  uint64_t lines_seen_ = 0;
};

enum class IncaError {
  kOk = 0,
  kDanglingTag,  // casing tag with no following token
};

struct IncaDecodeResult {
  Line text;
  IncaError error = IncaError::kOk;
};

Line inca_encode(std::string_view line, const CasingVocabulary& vocab);
IncaDecodeResult inca_decode(std::string_view line, const CasingVocabulary& vocab);

}  // namespace ukcs

#endif  // UKCS_INCA_H_
