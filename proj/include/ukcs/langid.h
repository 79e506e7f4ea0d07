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

#ifndef UKCS_LANGID_H_
#define UKCS_LANGID_H_

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ukcs/textmodel.h"

// Character-n-gram language identification, rank-profile style: a model
// stores each language's top-K n-grams (n = 1..3 over lowercased,
// underscore-padded letter words) ranked by frequency. A line is labeled
// with the language whose profile is closest under the out-of-place rank
// distance, after a script gate drops candidates whose script cannot match.
namespace ukcs {

struct LangProfile {
  std::string lang;
  std::vector<std::string> grams;  // rank = position
  ScriptClass script = ScriptClass::kOther;
  std::unordered_map<std::string, int> rank;
};

struct Detection {
  std::string lang;
  // Normalized margin between the best and second-best candidate distance;
  // 1.0 when the script gate leaves a single candidate.
  double confidence = 0.0;
};

// All n-grams (with repetition) of a line, for n in 1..3: letters are
// lowercased, words padded as "_word_", everything else is a boundary.
std::vector<std::string> extract_ngrams(std::string_view line);

class LangIdModel {
 public:
  // Throws std::invalid_argument for fewer than two languages or an empty
  // sample (EmptySample).
  static LangIdModel train(const std::map<std::string, std::vector<Line>>& samples,
                           int k = kDefaultK);

  static LangIdModel load(std::istream& in, std::string_view name = "<model>");
  static LangIdModel load_file(const std::string& path);
  void save(std::ostream& out) const;
  void save_file(const std::string& path) const;

  // Empty optional: the line holds no letters (Indeterminate).
  std::optional<Detection> detect(std::string_view line) const;

  int k() const { return k_; }
  const std::vector<LangProfile>& profiles() const { return profiles_; }
  const LangProfile* profile(std::string_view lang) const;

  static constexpr int kDefaultK = 3000;

 private:
  LangIdModel() = default;
  int k_ = 0;
  std::vector<LangProfile> profiles_;
};

}  // namespace ukcs

#endif  // UKCS_LANGID_H_
