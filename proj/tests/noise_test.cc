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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>
#include <unordered_set>
#include <vector>

#include "ukcs/noise.h"
#include "ukcs/textmodel.h"
#include "ukcs/unicode.h"

using namespace ukcs;

namespace {

NoiseConfig only(double NoiseConfig::* field, double p) {
  NoiseConfig cfg;
  cfg.p_drop_initial_cap = 0;
  cfg.p_lowercase_all = 0;
  cfg.p_uppercase_span = 0;
  cfg.p_drop_final_punct = 0;
  cfg.p_add_punct = 0;
  cfg.*field = p;
  return cfg;
}

const NoiseConfig kZero = only(&NoiseConfig::p_add_punct, 0);

std::string strip_final_punct(const std::string& s) {
  std::u32string u = uni::to_u32(s);
  while (!u.empty() && std::u32string_view(U".,!?…").find(u.back()) !=
                           std::u32string_view::npos) {
    u.pop_back();
  }
  return uni::to_utf8(u);
}

}  // namespace

TEST_CASE("splitmix64 matches the reference sequence") {
  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFull);
  CHECK(rng.next() == 0x6E789E6AA1B965F4ull);
  CHECK(rng.next() == 0x06C45D188009454Full);
  CHECK(rng.next() == 0xF88BB8A8724C81ECull);
  SplitMix64 rng2(0x123456789ABCDEF0ull);
  CHECK(rng2.next() == 0x161922C645CE50E8ull);
  CHECK(rng2.next() == 0xAD760CAFA1697B60ull);
}

TEST_CASE("line_seed is deterministic and collision-free in practice") {
  CHECK(line_seed(0, 0) == 0xE220A8397B1DCDAFull);
  CHECK(line_seed(42, 7) == line_seed(42, 7));
  std::unordered_set<uint64_t> seen;
  seen.reserve(1000000);
  for (uint64_t i = 0; i < 1000000; ++i) {
    seen.insert(line_seed(20260825, i));
  }
  CHECK(seen.size() == 1000000);
}

TEST_CASE("zero probabilities mean identity") {
  const std::string lines[] = {"", "Dobrý den.", "ВЕЛИКІ ЛІТЕРИ!", "  ws  ",
                               "hmm…"};
  for (const std::string& l : lines) {
    for (uint64_t seed : {0ull, 1ull, 99999ull}) {
      CHECK(noise_line(l, kZero, seed) == l);
    }
  }
}

TEST_CASE("noise is a pure function of line, config and seed") {
  NoiseConfig cfg;  // defaults
  for (uint64_t seed = 0; seed < 200; ++seed) {
    std::string a = noise_line("Dobrý den, pane Nováku.", cfg, seed);
    std::string b = noise_line("Dobrý den, pane Nováku.", cfg, seed);
    CHECK(a == b);
  }
}

TEST_CASE("lowercase-all rule") {
  NoiseConfig cfg = only(&NoiseConfig::p_lowercase_all, 1.0);
  CHECK(noise_line("Dobrý den.", cfg, 1) == "dobrý den.");
  CHECK(noise_line("VELKÁ ZPRÁVA", cfg, 2) == "velká zpráva");
  CHECK(noise_line("Вітаю Вас", cfg, 3) == "вітаю вас");
}

TEST_CASE("drop-initial-cap rule lowercases the first cased letter") {
  NoiseConfig cfg = only(&NoiseConfig::p_drop_initial_cap, 1.0);
  CHECK(noise_line("Dobrý den.", cfg, 1) == "dobrý den.");
  CHECK(noise_line("«Квіти» тут", cfg, 2) == "«квіти» тут");
  CHECK(noise_line("42 Kusy", cfg, 3) == "42 kusy");
  CHECK(noise_line("žádná změna", cfg, 4) == "žádná změna");
  CHECK(noise_line("...", cfg, 5) == "...");
}

TEST_CASE("uppercase-span rule uppercases one to three whole tokens") {
  NoiseConfig cfg = only(&NoiseConfig::p_uppercase_span, 1.0);
  CHECK(noise_line("slovo", cfg, 1) == "SLOVO");
  CHECK(noise_line("", cfg, 1) == "");
  for (uint64_t seed = 0; seed < 500; ++seed) {
    std::string in = "jedna dvě tři čtyři pět šest";
    std::string out = noise_line(in, cfg, seed);
    TokenizedText ti = tokenize(in), to = tokenize(out);
    REQUIRE(ti.tokens.size() == to.tokens.size());
    std::vector<size_t> changed;
    for (size_t i = 0; i < ti.tokens.size(); ++i) {
      CHECK(to.tokens[i].ws == ti.tokens[i].ws);
      if (to.tokens[i].body != ti.tokens[i].body) {
        CHECK(to.tokens[i].body == uni::upper_copy_utf8(ti.tokens[i].body));
        changed.push_back(i);
      }
    }
    REQUIRE(!changed.empty());
    CHECK(changed.size() <= 3);
    CHECK(changed.back() - changed.front() + 1 == changed.size());  // contiguous
  }
}

TEST_CASE("final punctuation rules") {
  NoiseConfig drop = only(&NoiseConfig::p_drop_final_punct, 1.0);
  CHECK(noise_line("Ahoj.", drop, 1) == "Ahoj");
  CHECK(noise_line("Ahoj!!", drop, 1) == "Ahoj!");
  CHECK(noise_line("Ahoj…", drop, 1) == "Ahoj");
  CHECK(noise_line("Jak se máš?", drop, 1) == "Jak se máš");
  CHECK(noise_line("čárka,", drop, 1) == "čárka");
  CHECK(noise_line("Ahoj", drop, 1) == "Ahoj");

  NoiseConfig add = only(&NoiseConfig::p_add_punct, 1.0);
  CHECK(noise_line("Ahoj!", add, 1) == "Ahoj!!");
  CHECK(noise_line("hm…", add, 1) == "hm……");
  for (uint64_t seed = 0; seed < 100; ++seed) {
    std::string out = noise_line("Ahoj", add, seed);
    bool known = out == "Ahoj." || out == "Ahoj!" || out == "Ahoj?";
    CHECK(known);
  }

  // A fired drop suppresses the add rule even when nothing was removable.
  NoiseConfig both = only(&NoiseConfig::p_drop_final_punct, 1.0);
  both.p_add_punct = 1.0;
  CHECK(noise_line("Ahoj.", both, 1) == "Ahoj");
  CHECK(noise_line("Ahoj", both, 1) == "Ahoj");
}

TEST_CASE("noise keeps all non-casing non-final-punct content") {
  NoiseConfig cfg;
  cfg.p_drop_initial_cap = 0.5;
  cfg.p_lowercase_all = 0.3;
  cfg.p_uppercase_span = 0.4;
  cfg.p_drop_final_punct = 0.5;
  cfg.p_add_punct = 0.5;
  const std::string lines[] = {
      "Dobrý den, pane Nováku.",
      "Зараз у нас є 4-місячні миші!",
      "Wi-Fi 64GB…",
      "poslední",
  };
  for (const std::string& l : lines) {
    for (uint64_t seed = 0; seed < 300; ++seed) {
      std::string out = noise_line(l, cfg, seed);
      CHECK(uni::lower_copy_utf8(strip_final_punct(out)) ==
            uni::lower_copy_utf8(strip_final_punct(l)));
    }
  }
}

TEST_CASE("empirical application rates sit at the configured probability") {
  struct RuleCase {
    double NoiseConfig::* field;
    std::string line;
  };
  const RuleCase cases[] = {
      {&NoiseConfig::p_lowercase_all, "Velká Písmena Všude"},
      {&NoiseConfig::p_drop_initial_cap, "Kapitála na začátku"},
      {&NoiseConfig::p_uppercase_span, "samá malá písmena tady"},
      {&NoiseConfig::p_drop_final_punct, "Na konci tečka."},
      {&NoiseConfig::p_add_punct, "Bez interpunkce"},
  };
  for (const RuleCase& rc : cases) {
    NoiseConfig cfg = only(rc.field, 0.5);
    int applied = 0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
      if (noise_line(rc.line, cfg, line_seed(7, i)) != rc.line) ++applied;
    }
    double rate = static_cast<double>(applied) / n;
    CAPTURE(rc.line);
    CHECK(std::abs(rate - 0.5) <= 0.01);
  }
}

TEST_CASE("config validation") {
  NoiseConfig bad;
  bad.p_add_punct = 1.5;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad.p_add_punct = -0.1;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  NoiseConfig good;
  CHECK_NOTHROW(good.validate());
}
