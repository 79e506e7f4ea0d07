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

#include "ukcs/pipeline.h"

#include <condition_variable>
#include <deque>
#include <exception>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>
#include <utility>
#include <vector>

namespace ukcs {

namespace {

// After a successful getline, eof tells whether the line was the unterminated
// tail of the stream.
bool read_line(std::istream& in, std::string& line, bool& newline) {
  if (!std::getline(in, line)) return false;
  newline = !in.eof();
  return true;
}

void emit(std::ostream& out, const std::string& line, bool newline, MapResult& res) {
  out << line;
  if (newline) out << '\n';
  ++res.lines_out;
}

MapResult map_sequential(std::istream& in, std::ostream& out, const LineMapper& fn) {
  MapResult res;
  std::string line;
  bool newline = false;
  while (read_line(in, line, newline)) {
    uint64_t index = res.lines_in++;
    std::optional<std::string> mapped = fn(index, line);
    if (mapped) emit(out, *mapped, newline, res);
  }
  return res;
}

struct Block {
  uint64_t seq = 0;
  uint64_t first_index = 0;
  std::vector<std::string> lines;
  std::vector<char> newline;
};

struct Done {
  std::vector<std::optional<std::string>> outs;  // may stop short at a fault
  std::vector<char> newline;
  std::exception_ptr error;
};

}  // namespace

MapResult map_lines(std::istream& in, std::ostream& out, const LineMapper& fn,
                    const ParallelOptions& opt) {
  unsigned workers = opt.workers == 0 ? 1 : opt.workers;
  if (workers == 1) return map_sequential(in, out, fn);
  size_t block_lines = opt.block_lines == 0 ? 1 : opt.block_lines;
  size_t cap = static_cast<size_t>(workers) * 4;

  std::mutex mu;
  std::condition_variable cv_task, cv_done;
  std::deque<Block> tasks;
  std::map<uint64_t, Done> done;
  bool stop = false;
  size_t in_flight = 0;

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        Block block;
        {
          std::unique_lock<std::mutex> lock(mu);
          cv_task.wait(lock, [&] { return stop || !tasks.empty(); });
          if (tasks.empty()) return;
          block = std::move(tasks.front());
          tasks.pop_front();
        }
        Done d;
        d.newline = std::move(block.newline);
        d.outs.reserve(block.lines.size());
        for (size_t j = 0; j < block.lines.size(); ++j) {
          try {
            d.outs.push_back(fn(block.first_index + j, block.lines[j]));
          } catch (...) {
            d.error = std::current_exception();
            break;
          }
        }
        {
          std::lock_guard<std::mutex> lock(mu);
          done[block.seq] = std::move(d);
        }
        cv_done.notify_all();
      }
    });
  }
  struct Joiner {
    std::mutex& mu;
    std::condition_variable& cv;
    bool& stop;
    std::vector<std::thread>& pool;
    ~Joiner() {
      {
        std::lock_guard<std::mutex> lock(mu);
        stop = true;
      }
      cv.notify_all();
      for (auto& t : pool) t.join();
    }
  } joiner{mu, cv_task, stop, pool};

  MapResult res;
  uint64_t next_read_seq = 0, next_write_seq = 0, index = 0;
  bool input_done = false;
  while (!input_done || next_write_seq < next_read_seq) {
    while (!input_done) {
      {
        std::lock_guard<std::mutex> lock(mu);
        if (in_flight >= cap) break;
      }
      Block block;
      block.seq = next_read_seq;
      block.first_index = index;
      std::string line;
      bool newline = false;
      while (block.lines.size() < block_lines && read_line(in, line, newline)) {
        block.lines.push_back(std::move(line));
        block.newline.push_back(newline ? 1 : 0);
      }
      if (block.lines.empty()) {
        input_done = true;
        break;
      }
      index += block.lines.size();
      res.lines_in += block.lines.size();
      ++next_read_seq;
      {
        std::lock_guard<std::mutex> lock(mu);
        tasks.push_back(std::move(block));
        ++in_flight;
      }
      cv_task.notify_one();
    }
    if (next_write_seq == next_read_seq) continue;  // nothing outstanding
    Done d;
    {
      std::unique_lock<std::mutex> lock(mu);
      cv_done.wait(lock, [&] { return done.count(next_write_seq) > 0; });
      d = std::move(done[next_write_seq]);
      done.erase(next_write_seq);
      --in_flight;
    }
    ++next_write_seq;
    for (size_t j = 0; j < d.outs.size(); ++j) {
      if (d.outs[j]) emit(out, *d.outs[j], d.newline[j], res);
    }
    if (d.error) std::rethrow_exception(d.error);
  }
  return res;
}

}  // namespace ukcs
