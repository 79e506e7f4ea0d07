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

#ifndef UKCS_DCE_H_
#define UKCS_DCE_H_

#include <cstdint>
#include <iosfwd>
#include <queue>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Dual cross-entropy selection: rank externally scored sentence pairs by
// agreement and confidence of a forward and a backward translation model,
// keep the best N. Entropies arrive pre-normalized per token; nothing here
// runs a model. The score favors pairs the two models agree on
// (disagreement penalty) and are confident about (mean penalty); lower is
// better. The formula lives in one function so a variant can be swapped
// without touching selection.
namespace ukcs {

struct ScoredPair {
  std::string id;
  double fwd = 0.0;  // forward cross-entropy, nats/token
  double bwd = 0.0;  // backward cross-entropy, nats/token
};

struct DceConfig {
  enum class Mode { kTopN, kRatio };
  Mode mode = Mode::kTopN;
  uint64_t top_n = 0;
  double ratio = 0.0;
  uint64_t authentic_count = 0;

  static DceConfig top(uint64_t n);
  static DceConfig ratio_of(double r, uint64_t authentic);

  // TopN returns n; Ratio rounds ratio * authentic_count (half away from
  // zero). Throws std::invalid_argument unless the result is positive.
  uint64_t resolve_n() const;
};

// score = |fwd - bwd| + (fwd + bwd) / 2; symmetric, zero at (0, 0).
// Throws std::domain_error unless both inputs are finite and non-negative.
double dce_score(double fwd, double bwd);

// Bounded top-n structure over (score, input index): keeps the n smallest
// scores, ties resolved toward the earlier index. Shards over disjoint
// index ranges merge exactly.
class TopNSelector {
 public:
  explicit TopNSelector(uint64_t n);

  void add(ScoredPair pair, uint64_t index);
  void merge(TopNSelector&& other);

  uint64_t capacity() const { return n_; }
  size_t size() const { return heap_.size(); }
  // Selected records with their input indices, ascending by index.
  std::vector<std::pair<uint64_t, ScoredPair>> take_sorted() &&;

 private:
  struct Item {
    double score;
    uint64_t index;
    ScoredPair pair;
  };
  struct Worse {
    bool operator()(const Item& a, const Item& b) const {
      if (a.score != b.score) return a.score < b.score;
      return a.index < b.index;
    }
  };

  uint64_t n_;
  std::priority_queue<Item, std::vector<Item>, Worse> heap_;  // top = worst kept
};

struct SelectStats {
  uint64_t total = 0;     // records seen
  uint64_t excluded = 0;  // out-of-domain entropies, skipped and counted
  uint64_t selected = 0;
  bool clamped = false;   // n exceeded the valid records, kept all
};

struct SelectOutcome {
  std::vector<uint64_t> indices;  // ascending input indices of kept records
  std::vector<ScoredPair> kept;   // parallel to indices
  SelectStats stats;
};

// In-memory selection; the record's vector position is its index.
// Throws std::runtime_error on duplicate ids.
SelectOutcome select(const std::vector<ScoredPair>& records, const DceConfig& cfg);

struct ScoreReadOptions {
  // Strict mode throws on a syntactically malformed line; lenient counts it
  // as excluded. Entropies outside the domain (negative, non-finite) are a
  // record-level condition and count as excluded in both modes.
  bool strict = true;
  std::string name = "<scores>";
};

// Streams `id<TAB>fwd<TAB>bwd` lines through a bounded selector. Record
// index is the zero-based line number. Throws on duplicate ids.
SelectOutcome select_scores(std::istream& in, const DceConfig& cfg,
                            const ScoreReadOptions& opts = {});

}  // namespace ukcs

#endif  // UKCS_DCE_H_
