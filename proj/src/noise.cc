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

#include "ukcs/noise.h"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ukcs/unicode.h"

namespace ukcs {
namespace {

constexpr std::u32string_view kFinalPunct = U".,!?…";
constexpr std::u32string_view kAddPunct = U".!?";

}  // namespace

uint64_t line_seed(uint64_t global_seed, uint64_t line_index) {
  return SplitMix64(global_seed ^ line_index).next();
}

void NoiseConfig::validate() const {
  for (double p : {p_drop_initial_cap, p_lowercase_all, p_uppercase_span,
                   p_drop_final_punct, p_add_punct}) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("noise probability outside [0,1]");
    }
  }
}

Line noise_line(std::string_view line, const NoiseConfig& cfg, uint64_t seed) {
  SplitMix64 rng(seed);
  std::u32string text = uni::to_u32(line);

  if (rng.bernoulli(cfg.p_lowercase_all)) {
    for (char32_t& c : text) c = uni::to_lower(c);
  } else {
    if (rng.bernoulli(cfg.p_drop_initial_cap)) {
      for (char32_t& c : text) {
        if (uni::is_cased(c)) {
          c = uni::to_lower(c);
          break;
        }
      }
    }
    if (rng.bernoulli(cfg.p_uppercase_span)) {
      TokenizedText toks = tokenize(uni::to_utf8(text));
      if (!toks.tokens.empty()) {
        size_t len = 1 + rng.next_below(3);
        len = std::min(len, toks.tokens.size());
        size_t start = rng.next_below(toks.tokens.size() - len + 1);
        for (size_t i = start; i < start + len; ++i) {
          toks.tokens[i].body = uni::upper_copy_utf8(toks.tokens[i].body);
        }
        text = uni::to_u32(toks.detokenize());
      }
    }
  }

  if (rng.bernoulli(cfg.p_drop_final_punct)) {
    if (!text.empty() && kFinalPunct.find(text.back()) != std::u32string_view::npos) {
      text.pop_back();
    }
  } else if (rng.bernoulli(cfg.p_add_punct)) {
    if (!text.empty() && kFinalPunct.find(text.back()) != std::u32string_view::npos) {
      text.push_back(text.back());
    } else {
      text.push_back(kAddPunct[rng.next_below(kAddPunct.size())]);
    }
  }
  return uni::to_utf8(text);
}

}  // namespace ukcs
