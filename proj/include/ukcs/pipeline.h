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

#ifndef UKCS_PIPELINE_H_
#define UKCS_PIPELINE_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

// Ordered line fan-out: lines stream through a pure per-line function on N
// workers, and the merged output is byte-identical to the sequential run for
// every N. Blocks of lines bound the memory in flight; a throwing mapper
// aborts at the first faulty record in input order, whatever the worker
// schedule did.
namespace ukcs {

struct ParallelOptions {
  unsigned workers = 1;
  size_t block_lines = 2048;
};

// Returns the emitted line (without newline) or nullopt to drop the line.
// Called concurrently; must be pure up to its own synchronized state.
using LineMapper =
    std::function<std::optional<std::string>(uint64_t index, const std::string& line)>;

struct MapResult {
  uint64_t lines_in = 0;
  uint64_t lines_out = 0;
};

// Reads `in` line by line (the final line may lack a newline, which the
// output then also lacks), applies the mapper, writes kept lines in input
// order. Exceptions from the mapper propagate for the earliest faulty line.
MapResult map_lines(std::istream& in, std::ostream& out, const LineMapper& fn,
                    const ParallelOptions& opt = {});

}  // namespace ukcs

#endif  // UKCS_PIPELINE_H_
