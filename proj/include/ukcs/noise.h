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

#ifndef UKCS_NOISE_H_
#define UKCS_NOISE_H_

#include <cstdint>
#include <string_view>

#include "ukcs/textmodel.h"

// Seeded synthetic noise imitating frequent orthography deviations: missing
// capitalization, lower- or upper-cased stretches, missing or extra final
// punctuation. Each line is noised from its own seed, so results do not
// depend on processing order or worker count.
namespace ukcs {

// Fixed-increment splitmix64; portable across platforms, unlike the standard
// distributions.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0,1) with 53 random bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [0,n); the modulo bias is irrelevant at the tiny n used here.
  uint64_t next_below(uint64_t n) { return next() % n; }

  bool bernoulli(double p) { return next_double() < p; }

 private:
  uint64_t state_;
};

uint64_t line_seed(uint64_t global_seed, uint64_t line_index);

struct NoiseConfig {
  double p_drop_initial_cap = 0.1;
  double p_lowercase_all = 0.05;
  double p_uppercase_span = 0.02;
  double p_drop_final_punct = 0.1;
  double p_add_punct = 0.05;
  uint64_t global_seed = 0;

  // Throws std::invalid_argument when a probability leaves [0,1].
  void validate() const;
};

// Applies the rules in fixed order with one draw per reached decision:
// (1) lowercase the whole line, which ends casing noise; otherwise
// (2) lowercase the first cased letter and (3) uppercase a span of one to
// three tokens; then (4) drop a final ". , ! ? …" character; only when (4)
// did not fire, (5) duplicate existing final punctuation or append ". ! ?".
Line noise_line(std::string_view line, const NoiseConfig& cfg, uint64_t seed);

}  // namespace ukcs

#endif  // UKCS_NOISE_H_
