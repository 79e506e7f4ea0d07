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

#include "ukcs/dce.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <stdexcept>
#include <unordered_set>

namespace ukcs {

namespace {

bool in_domain(double x) { return std::isfinite(x) && x >= 0.0; }

bool parse_double(std::string_view field, double& out) {
  const char* first = field.data();
  const char* last = first + field.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

DceConfig DceConfig::top(uint64_t n) {
  DceConfig cfg;
  cfg.mode = Mode::kTopN;
  cfg.top_n = n;
  return cfg;
}

DceConfig DceConfig::ratio_of(double r, uint64_t authentic) {
  DceConfig cfg;
  cfg.mode = Mode::kRatio;
  cfg.ratio = r;
  cfg.authentic_count = authentic;
  return cfg;
}

uint64_t DceConfig::resolve_n() const {
  if (mode == Mode::kTopN) {
    if (top_n == 0) throw std::invalid_argument("dce: top-n must be positive");
    return top_n;
  }
  if (!(ratio > 0.0) || !std::isfinite(ratio) || authentic_count == 0) {
    throw std::invalid_argument("dce: ratio and authentic count must be positive");
  }
  double n = ratio * static_cast<double>(authentic_count);
  long long rounded = std::llround(n);
  if (rounded < 1) throw std::invalid_argument("dce: ratio resolves to zero records");
  return static_cast<uint64_t>(rounded);
}

double dce_score(double fwd, double bwd) {
  if (!in_domain(fwd) || !in_domain(bwd)) {
    throw std::domain_error("dce: entropies must be finite and non-negative");
  }
  return std::abs(fwd - bwd) + (fwd + bwd) / 2.0;
}

TopNSelector::TopNSelector(uint64_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("dce: selector capacity must be positive");
}

void TopNSelector::add(ScoredPair pair, uint64_t index) {
  Item item{dce_score(pair.fwd, pair.bwd), index, std::move(pair)};
  if (heap_.size() < n_) {
    heap_.push(std::move(item));
    return;
  }
  const Item& worst = heap_.top();
  if (item.score < worst.score ||
      (item.score == worst.score && item.index < worst.index)) {
    heap_.pop();
    heap_.push(std::move(item));
  }
}

void TopNSelector::merge(TopNSelector&& other) {
  while (!other.heap_.empty()) {
    Item item = other.heap_.top();
    other.heap_.pop();
    add(std::move(item.pair), item.index);
  }
}

std::vector<std::pair<uint64_t, ScoredPair>> TopNSelector::take_sorted() && {
  std::vector<std::pair<uint64_t, ScoredPair>> out;
  out.reserve(heap_.size());
  while (!heap_.empty()) {
    out.emplace_back(heap_.top().index, heap_.top().pair);
    heap_.pop();
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

namespace {

SelectOutcome finish(TopNSelector&& selector, SelectStats stats) {
  SelectOutcome outcome;
  uint64_t valid = stats.total - stats.excluded;
  stats.clamped = selector.capacity() > valid;
  for (auto& [index, pair] : std::move(selector).take_sorted()) {
    outcome.indices.push_back(index);
    outcome.kept.push_back(std::move(pair));
  }
  stats.selected = outcome.kept.size();
  outcome.stats = stats;
  return outcome;
}

}  // namespace

SelectOutcome select(const std::vector<ScoredPair>& records, const DceConfig& cfg) {
  TopNSelector selector(cfg.resolve_n());
  SelectStats stats;
  std::unordered_set<std::string> seen;
  seen.reserve(records.size());
  for (const auto& record : records) {
    if (!seen.insert(record.id).second) {
      throw std::runtime_error("dce: duplicate id \"" + record.id + "\"");
    }
    uint64_t index = stats.total++;
    if (!in_domain(record.fwd) || !in_domain(record.bwd)) {
      ++stats.excluded;
      continue;
    }
    selector.add(record, index);
  }
  return finish(std::move(selector), stats);
}

SelectOutcome select_scores(std::istream& in, const DceConfig& cfg,
                            const ScoreReadOptions& opts) {
  TopNSelector selector(cfg.resolve_n());
  SelectStats stats;
  std::unordered_set<std::string> seen;
  std::string raw;
  size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    uint64_t index = stats.total++;
    size_t t1 = raw.find('\t');
    size_t t2 = t1 == std::string::npos ? std::string::npos : raw.find('\t', t1 + 1);
    ScoredPair pair;
    bool well_formed =
        t1 != std::string::npos && t2 != std::string::npos && t1 > 0 &&
        raw.find('\t', t2 + 1) == std::string::npos &&
        parse_double(std::string_view(raw).substr(t1 + 1, t2 - t1 - 1), pair.fwd) &&
        parse_double(std::string_view(raw).substr(t2 + 1), pair.bwd);
    if (!well_formed) {
      if (opts.strict) {
        throw std::runtime_error(opts.name + ":" + std::to_string(lineno) +
                                 ": expected id<TAB>fwd<TAB>bwd");
      }
      ++stats.excluded;
      continue;
    }
    pair.id = raw.substr(0, t1);
    if (!seen.insert(pair.id).second) {
      throw std::runtime_error(opts.name + ":" + std::to_string(lineno) +
                               ": duplicate id \"" + pair.id + "\"");
    }
    if (!in_domain(pair.fwd) || !in_domain(pair.bwd)) {
      ++stats.excluded;
      continue;
    }
    selector.add(std::move(pair), index);
  }
  return finish(std::move(selector), stats);
}

}  // namespace ukcs
