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

#include "ukcs/config.h"

#include <charconv>
#include <fstream>
#include <istream>
#include <stdexcept>

namespace ukcs {

namespace {

[[noreturn]] void fail(std::string_view name, size_t lineno, const std::string& what) {
  throw std::runtime_error(std::string(name) + ":" + std::to_string(lineno) + ": " + what);
}

std::string trim(std::string_view s) {
  size_t start = s.find_first_not_of(" \t");
  if (start == std::string_view::npos) return "";
  size_t stop = s.find_last_not_of(" \t");
  return std::string(s.substr(start, stop - start + 1));
}

template <typename T>
T parse_number(std::string_view name, size_t lineno, const std::string& key,
               const std::string& value) {
  T out{};
  const char* first = value.data();
  const char* last = first + value.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || ptr != last || value.empty()) {
    fail(name, lineno, "bad value for " + key + ": \"" + value + "\"");
  }
  return out;
}

std::set<std::string> parse_list(const std::string& value) {
  std::set<std::string> out;
  size_t pos = 0;
  while (pos <= value.size()) {
    size_t comma = value.find(',', pos);
    std::string item = trim(std::string_view(value).substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos));
    if (!item.empty()) out.insert(item);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

PipelineConfig PipelineConfig::load(std::istream& in, std::string_view name) {
  PipelineConfig cfg;
  std::string raw, section;
  size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(name, lineno, "unterminated section header");
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      if (section != "general" && section != "filter" && section != "noise" &&
          section != "romanize" && section != "inca" && section != "langid") {
        fail(name, lineno, "unknown section [" + section + "]");
      }
      continue;
    }
    size_t eq = line.find('=');
    if (eq == std::string::npos) fail(name, lineno, "expected key = value");
    std::string key = trim(std::string_view(line).substr(0, eq));
    std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key.empty()) fail(name, lineno, "empty key");
    if (section.empty()) fail(name, lineno, "key \"" + key + "\" before any section");

    auto num_d = [&] { return parse_number<double>(name, lineno, key, value); };
    auto num_u64 = [&] { return parse_number<uint64_t>(name, lineno, key, value); };
    auto num_size = [&] { return parse_number<size_t>(name, lineno, key, value); };

    bool known = true;
    if (section == "general") {
      if (key == "workers") cfg.workers = parse_number<unsigned>(name, lineno, key, value);
      else if (key == "stats_out") cfg.stats_out = value;
      else known = false;
    } else if (section == "filter") {
      if (key == "ratio_min") cfg.filter.ratio_min = num_d();
      else if (key == "ratio_max") cfg.filter.ratio_max = num_d();
      else if (key == "ratio_min_length_chars") cfg.filter.ratio_min_length_chars = num_size();
      else if (key == "mono_max_chars_uk") cfg.filter.mono_max_chars_uk = num_size();
      else if (key == "mono_max_chars_cs") cfg.filter.mono_max_chars_cs = num_size();
      else if (key == "langid_threshold") cfg.filter.langid_threshold = num_d();
      else if (key == "exempt_corpora") cfg.filter.exempt_corpora = parse_list(value);
      else if (key == "rules") cfg.filter_rules = value;
      else if (key == "lexicon") cfg.filter_lexicon = value;
      else if (key == "langid_model") cfg.filter_langid_model = value;
      else known = false;
    } else if (section == "noise") {
      if (key == "p_drop_initial_cap") cfg.noise.p_drop_initial_cap = num_d();
      else if (key == "p_lowercase_all") cfg.noise.p_lowercase_all = num_d();
      else if (key == "p_uppercase_span") cfg.noise.p_uppercase_span = num_d();
      else if (key == "p_drop_final_punct") cfg.noise.p_drop_final_punct = num_d();
      else if (key == "p_add_punct") cfg.noise.p_add_punct = num_d();
      else if (key == "seed") cfg.noise.global_seed = num_u64();
      else known = false;
    } else if (section == "romanize") {
      if (key == "table") cfg.romanize_table = value;
      else known = false;
    } else if (section == "inca") {
      if (key == "vocabulary") cfg.inca_vocabulary = value;
      else known = false;
    } else if (section == "langid") {
      if (key == "model") cfg.langid_model = value;
      else known = false;
    }
    if (!known) fail(name, lineno, "unknown key \"" + key + "\" in [" + section + "]");
  }
  cfg.validate();
  return cfg;
}

PipelineConfig PipelineConfig::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  return load(in, path);
}

void PipelineConfig::validate() const {
  if (workers == 0) throw std::invalid_argument("config: workers must be positive");
  filter.validate();
  noise.validate();
}

}  // namespace ukcs
