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

#ifndef UKCS_CONFIG_H_
#define UKCS_CONFIG_H_

#include <iosfwd>
#include <string>
#include <string_view>

#include "ukcs/filter.h"
#include "ukcs/noise.h"

// Pipeline configuration file: INI sections with a closed schema, so a typo
// fails loudly instead of silently running on defaults. `#` comments; keys
// are `name = value`. Flags override file values, the file overrides
// defaults, and the fully resolved result is what the stats document echoes.
//
//   [general]   workers, stats_out
//   [filter]    ratio_min, ratio_max, ratio_min_length_chars,
//               mono_max_chars_uk, mono_max_chars_cs, langid_threshold,
//               exempt_corpora (comma separated), rules, lexicon,
//               langid_model
//   [noise]     p_drop_initial_cap, p_lowercase_all, p_uppercase_span,
//               p_drop_final_punct, p_add_punct, seed
//   [romanize]  table
//   [inca]      vocabulary
//   [langid]    model
namespace ukcs {

struct PipelineConfig {
  unsigned workers = 1;
  std::string stats_out;  // empty = no stats document

  FilterConfig filter;
  std::string filter_rules;         // rule file path, empty = no rules
  std::string filter_lexicon;       // lexicon path, empty = none
  std::string filter_langid_model;  // model path, empty = language step off

  NoiseConfig noise;

  std::string romanize_table;   // table path, empty = built-in Czech table
  std::string inca_vocabulary;  // vocabulary path, empty = empty vocabulary
  std::string langid_model;     // model path for the langid subcommand

  // Throws std::runtime_error with file:line on syntax or schema errors and
  // std::invalid_argument on out-of-range values.
  static PipelineConfig load(std::istream& in, std::string_view name = "<config>");
  static PipelineConfig load_file(const std::string& path);

  void validate() const;
};

}  // namespace ukcs

#endif  // UKCS_CONFIG_H_
