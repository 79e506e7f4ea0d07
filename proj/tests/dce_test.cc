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

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "ukcs/dce.h"
#include "ukcs/noise.h"

using namespace ukcs;

namespace {

// Brute-force oracle: full sort by (score, input index), take n.
std::vector<uint64_t> oracle_indices(const std::vector<ScoredPair>& records,
                                     uint64_t n) {
  std::vector<std::pair<double, uint64_t>> scored;
  for (size_t i = 0; i < records.size(); ++i) {
    scored.emplace_back(dce_score(records[i].fwd, records[i].bwd), i);
  }
  std::sort(scored.begin(), scored.end());
  if (scored.size() > n) scored.resize(n);
  std::vector<uint64_t> indices;
  for (const auto& [score, index] : scored) indices.push_back(index);
  std::sort(indices.begin(), indices.end());
  return indices;
}

// Quantized entropies produce plenty of exact score ties.
std::vector<ScoredPair> random_records(uint64_t seed, size_t count) {
  SplitMix64 rng(seed);
  std::vector<ScoredPair> records;
  records.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    records.push_back({"r" + std::to_string(i),
                       static_cast<double>(rng.next_below(40)) / 10.0,
                       static_cast<double>(rng.next_below(40)) / 10.0});
  }
  return records;
}

}  // namespace

TEST_CASE("dce score formula") {
  CHECK(dce_score(0.0, 0.0) == 0.0);
  CHECK(dce_score(1.0, 1.0) == 1.0);
  CHECK(dce_score(2.0, 0.0) == 3.0);
  CHECK(dce_score(0.0, 2.0) == 3.0);

  SplitMix64 rng(99);
  for (int i = 0; i < 200; ++i) {
    double a = rng.next_double() * 8.0;
    double b = rng.next_double() * 8.0;
    CHECK(dce_score(a, b) == dce_score(b, a));
    CHECK(dce_score(a, b) >= 0.0);
  }

  double inf = std::numeric_limits<double>::infinity();
  double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(dce_score(inf, 1.0), std::domain_error);
  CHECK_THROWS_AS(dce_score(1.0, nan), std::domain_error);
  CHECK_THROWS_AS(dce_score(-0.5, 1.0), std::domain_error);
}

TEST_CASE("config resolution") {
  CHECK(DceConfig::top(7).resolve_n() == 7);
  CHECK_THROWS_AS(DceConfig::top(0).resolve_n(), std::invalid_argument);

  CHECK(DceConfig::ratio_of(5.0, 3).resolve_n() == 15);
  CHECK(DceConfig::ratio_of(0.5, 3).resolve_n() == 2);  // round half away from zero
  CHECK(DceConfig::ratio_of(1.0, 1).resolve_n() == 1);
  CHECK_THROWS_AS(DceConfig::ratio_of(0.1, 1).resolve_n(), std::invalid_argument);
  CHECK_THROWS_AS(DceConfig::ratio_of(0.0, 10).resolve_n(), std::invalid_argument);
  CHECK_THROWS_AS(DceConfig::ratio_of(2.0, 0).resolve_n(), std::invalid_argument);
}

TEST_CASE("selection basics") {
  SUBCASE("ties at the cutoff prefer earlier records") {
    std::vector<ScoredPair> records = {
        {"a", 3.0, 3.0}, {"b", 1.0, 1.0}, {"c", 2.0, 2.0}, {"d", 1.0, 1.0}};
    SelectOutcome out = select(records, DceConfig::top(2));
    REQUIRE(out.indices == std::vector<uint64_t>{1, 3});
    CHECK(out.kept[0].id == "b");
    CHECK(out.kept[1].id == "d");
    CHECK(out.stats.total == 4);
    CHECK(out.stats.selected == 2);
    CHECK_FALSE(out.stats.clamped);

    // One slot: the earlier of the two score-1 records wins.
    SelectOutcome one = select(records, DceConfig::top(1));
    CHECK(one.indices == std::vector<uint64_t>{1});
  }
  SUBCASE("n equal to the input is the identity") {
    auto records = random_records(5, 20);
    SelectOutcome out = select(records, DceConfig::top(20));
    CHECK(out.indices.size() == 20);
    for (size_t i = 0; i < 20; ++i) {
      CHECK(out.indices[i] == i);
      CHECK(out.kept[i].id == records[i].id);
    }
  }
  SUBCASE("n beyond the input keeps all and flags the clamp") {
    auto records = random_records(6, 5);
    SelectOutcome out = select(records, DceConfig::top(50));
    CHECK(out.stats.clamped);
    CHECK(out.stats.selected == 5);
  }
  SUBCASE("ratio mode over one hundred records") {
    auto records = random_records(7, 100);
    SelectOutcome out = select(records, DceConfig::ratio_of(5.0, 3));
    CHECK(out.stats.selected == 15);
  }
  SUBCASE("duplicate ids fault") {
    std::vector<ScoredPair> records = {{"a", 1.0, 1.0}, {"a", 2.0, 2.0}};
    CHECK_THROWS_AS(select(records, DceConfig::top(1)), std::runtime_error);
  }
  SUBCASE("out-of-domain records are excluded and counted") {
    std::vector<ScoredPair> records = {
        {"a", 1.0, 1.0},
        {"b", std::numeric_limits<double>::quiet_NaN(), 0.0},
        {"c", -1.0, 0.0},
        {"d", 0.5, 0.5}};
    SelectOutcome out = select(records, DceConfig::top(3));
    CHECK(out.stats.total == 4);
    CHECK(out.stats.excluded == 2);
    CHECK(out.stats.selected == 2);
    CHECK(out.stats.clamped);  // only two valid records for three slots
    CHECK(out.indices == std::vector<uint64_t>{0, 3});
  }
}

TEST_CASE("streaming selection equals the sort oracle") {
  SplitMix64 rng(321);
  for (int trial = 0; trial < 40; ++trial) {
    auto records = random_records(1000 + trial, 1000);
    uint64_t n = 1 + rng.next_below(1000);
    SelectOutcome out = select(records, DceConfig::top(n));
    INFO("trial ", trial, " n ", n);
    CHECK(out.indices == oracle_indices(records, n));
  }
}

TEST_CASE("growing n only adds records") {
  auto records = random_records(42, 600);
  std::vector<uint64_t> prev;
  for (uint64_t n : {10, 25, 60, 200, 600}) {
    auto indices = select(records, DceConfig::top(n)).indices;
    CHECK(std::includes(indices.begin(), indices.end(), prev.begin(), prev.end()));
    prev = std::move(indices);
  }
}

TEST_CASE("scaling both entropies rescales scores and keeps the selection") {
  auto records = random_records(77, 400);
  auto base = select(records, DceConfig::top(120)).indices;
  for (double c : {2.0, 0.5, 3.0}) {
    auto scaled = records;
    for (auto& r : scaled) {
      r.fwd *= c;
      r.bwd *= c;
    }
    CHECK(select(scaled, DceConfig::top(120)).indices == base);
  }
  CHECK(dce_score(2.0 * 1.25, 2.0 * 0.25) == 2.0 * dce_score(1.25, 0.25));
  CHECK(dce_score(3.0 * 1.2, 3.0 * 0.4) ==
        doctest::Approx(3.0 * dce_score(1.2, 0.4)));
}

TEST_CASE("sharded selection merges exactly") {
  auto records = random_records(55, 900);
  SelectOutcome sequential = select(records, DceConfig::top(150));

  std::vector<TopNSelector> shards(3, TopNSelector(150));
  for (size_t i = 0; i < records.size(); ++i) {
    shards[i % 3].add(records[i], i);
  }
  TopNSelector merged = std::move(shards[0]);
  merged.merge(std::move(shards[1]));
  merged.merge(std::move(shards[2]));
  auto items = std::move(merged).take_sorted();
  REQUIRE(items.size() == sequential.indices.size());
  for (size_t i = 0; i < items.size(); ++i) {
    CHECK(items[i].first == sequential.indices[i]);
    CHECK(items[i].second.id == sequential.kept[i].id);
  }
}

TEST_CASE("score file wire format") {
  SUBCASE("well-formed input selects by score") {
    std::istringstream in("a\t1.0\t2.0\nb\t0.5\t0.5\nc\t3\t0\n");
    SelectOutcome out = select_scores(in, DceConfig::top(2));
    CHECK(out.indices == std::vector<uint64_t>{0, 1});
    CHECK(out.kept[0].id == "a");
    CHECK(out.kept[1].id == "b");
  }
  SUBCASE("ids may contain anything but a tab; CRLF tolerated") {
    std::istringstream in("sent 1 (dev)\t0.1\t0.1\r\nsent 2\t0.2\t0.2\r\n");
    SelectOutcome out = select_scores(in, DceConfig::top(1));
    REQUIRE(out.kept.size() == 1);
    CHECK(out.kept[0].id == "sent 1 (dev)");
  }
  SUBCASE("duplicate id faults with the line number") {
    std::istringstream in("a\t1\t1\nb\t1\t1\na\t2\t2\n");
    CHECK_THROWS_WITH_AS(select_scores(in, DceConfig::top(1)),
                         "<scores>:3: duplicate id \"a\"", std::runtime_error);
  }
  SUBCASE("strict mode faults on malformed lines") {
    for (const char* text : {"a\t1\n", "a\t1\t2\t3\n", "a\tx\t2\n", "\t1\t2\n",
                             "a\t1\t2e\n", "plain text\n", "\n"}) {
      std::istringstream in(std::string("ok\t1\t1\n") + text);
      INFO("line: ", text);
      CHECK_THROWS_AS(select_scores(in, DceConfig::top(1)), std::runtime_error);
    }
  }
  SUBCASE("lenient mode counts malformed lines as excluded") {
    std::istringstream in("a\t1\t1\nbroken line\nb\t0.25\t0.25\n");
    SelectOutcome out = select_scores(in, DceConfig::top(5), {false, "s"});
    CHECK(out.stats.total == 3);
    CHECK(out.stats.excluded == 1);
    CHECK(out.indices == std::vector<uint64_t>{0, 2});
  }
  SUBCASE("non-finite and negative entropies are record-level in both modes") {
    std::string text = "a\tnan\t1\nb\tinf\t1\nc\t-1\t1\nd\t0.5\t0.5\n";
    for (bool strict : {true, false}) {
      std::istringstream in(text);
      SelectOutcome out = select_scores(in, DceConfig::top(4), {strict, "s"});
      INFO("strict ", strict);
      CHECK(out.stats.total == 4);
      CHECK(out.stats.excluded == 3);
      CHECK(out.indices == std::vector<uint64_t>{3});
      CHECK(out.stats.clamped);
    }
  }
}
