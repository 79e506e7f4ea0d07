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

// Acceptance gate: ten release criteria, one PASS/FAIL line each. A
// criterion that can only fail because this host lacks the required
// hardware is reported FAIL (environment-limited) and does not fail the
// binary; any other failure exits nonzero.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "support/langid_corpus.h"
#include "ukcs/dce.h"
#include "ukcs/filter.h"
#include "ukcs/inca.h"
#include "ukcs/langid.h"
#include "ukcs/noise.h"
#include "ukcs/translit.h"
#include "ukcs/unicode.h"

namespace fs = std::filesystem;
using namespace ukcs;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = false;
  bool env_limited = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* pattern, ...) {
  va_list args;
  va_start(args, pattern);
  char buf[512];
  std::vsnprintf(buf, sizeof buf, pattern, args);
  va_end(args);
  return buf;
}

const std::string kBin = UKCS_BINARY_DIR "/ukcs";
const fs::path kTmp = UKCS_BINARY_DIR "/acceptance_tmp";

int run(const std::string& args) {
  std::string cmd = kBin + " " + args;
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

void spew(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

bool same_file(const fs::path& a, const fs::path& b) {
  return std::system(("cmp -s " + a.string() + " " + b.string()).c_str()) == 0;
}

std::string repeat(std::string_view piece, size_t n) {
  std::string out;
  out.reserve(piece.size() * n);
  for (size_t i = 0; i < n; ++i) out += piece;
  return out;
}

// Shared cs/uk detector model (script-disjoint pair) and the shipped rules.
const LangIdModel& pair_model() {
  static const LangIdModel model = LangIdModel::train(
      {{"cs", testsupport::make_corpus("cs", 7, 800)},
       {"uk", testsupport::make_corpus("uk", 8, 800)}},
      2000);
  return model;
}

RuleSet shipped_rules() {
  RuleSet rs =
      RuleSet::load_file(std::string(UKCS_SOURCE_DIR) + "/data/rules/default.rules");
  rs.add_lexicon_file(std::string(UKCS_SOURCE_DIR) +
                      "/data/rules/municipalities.tsv");
  return rs;
}

// 1. Showcase romanization, byte-exact and under a millisecond.
Outcome criterion_1() {
  const TranslitTable& t = TranslitTable::czech();
  const std::string input = "Зараз у нас є 4-місячні миші";
  const std::string want = "Zaraz u nas je 4-misjačni myši";
  (void)romanize(input, t);  // warm caches before timing
  auto start = Clock::now();
  std::string got = romanize(input, t);
  double ms = seconds_since(start) * 1e3;
  Outcome o;
  o.pass = got == want && ms < 1.0;
  o.detail = got == want
                 ? fmt("showcase sentence romanizes byte-exact in %.4f ms (limit 1 ms)", ms)
                 : "showcase sentence mismatch: got \"" + got + "\"";
  return o;
}

// 2. Round-trip identity over random strings plus every Cyrillic two-letter
// combination.
Outcome criterion_2() {
  const TranslitTable& t = TranslitTable::czech();
  auto start = Clock::now();

  std::u32string pool;
  for (char32_t c = 0x20; c <= 0x7E; ++c) pool += c;
  pool += U"абвгґдеєжзиіїйклмнопрстуфхцчшщьюя";
  pool += U"АБВГҐДЕЄЖЗИІЇЙКЛМНОПРСТУФХЦЧШЩЬЮЯ";
  pool += U"ыэёъЫЭЁЪ—–…«»„“”’ʼ·⟦⟧ ";

  uint64_t failures = 0;
  std::mt19937 rng(20260825);
  const int kRandom = 100000;
  for (int i = 0; i < kRandom; ++i) {
    std::u32string w;
    size_t len = rng() % 24;
    for (size_t j = 0; j < len; ++j) w += pool[rng() % pool.size()];
    std::string s = uni::to_utf8(w);
    DeromanizeResult r = deromanize(romanize(s, t), t);
    if (r.error != TranslitError::kOk || r.text != s) ++failures;
  }

  std::u32string cyr =
      U"абвгґдеєжзиіїйклмнопрстуфхцчшщьюя"
      U"АБВГҐДЕЄЖЗИІЇЙКЛМНОПРСТУФХЦЧШЩЬЮЯ"
      U"ъыэёЪЫЭЁ";
  uint64_t pairs = 0;
  for (char32_t a : cyr) {
    for (char32_t b : cyr) {
      std::string s = uni::to_utf8(std::u32string{a, b});
      DeromanizeResult r = deromanize(romanize(s, t), t);
      if (r.error != TranslitError::kOk || r.text != s) ++failures;
      ++pairs;
    }
  }

  double secs = seconds_since(start);
  Outcome o;
  o.pass = failures == 0 && secs < 30.0;
  o.detail = fmt("round trip over %d random strings + %llu exhaustive Cyrillic pairs: "
                 "%llu failures in %.1f s (limits 0, 30 s)",
                 kRandom, (unsigned long long)pairs, (unsigned long long)failures, secs);
  return o;
}

// 3. Showcase InCa example, byte-exact in both directions.
Outcome criterion_3() {
  VocabTrainer trainer;
  trainer.add_line("iPhone iPhone iphone");
  trainer.add_line("GB GB gb");
  CasingVocabulary v = trainer.finish(1);
  const std::string original = "My iPhone 64GB and iPod 64 GB or 32 gb";
  const std::string want =
      "<titlecase> my iphone <all-uppercase> 64gb and iPod 64 gb or 32 "
      "<all-lowercase> gb";
  std::string encoded = inca_encode(original, v);
  IncaDecodeResult back = inca_decode(encoded, v);
  Outcome o;
  o.pass = encoded == want && back.error == IncaError::kOk && back.text == original;
  o.detail = o.pass ? "InCa showcase encodes and decodes byte-exact"
                    : "InCa showcase mismatch: encoded \"" + encoded + "\"";
  return o;
}

std::string random_casing(const std::string& word, SplitMix64& rng) {
  std::u32string u = uni::to_u32(word);
  switch (rng.next_below(5)) {
    case 0:
      for (char32_t& c : u) c = uni::to_lower(c);
      break;
    case 1:
      for (char32_t& c : u) c = uni::to_upper(c);
      break;
    case 2:
      for (char32_t& c : u) c = uni::to_lower(c);
      if (!u.empty()) u[0] = uni::to_upper(u[0]);
      break;
    case 3:
      for (char32_t& c : u) c = rng.next_below(2) ? uni::to_upper(c) : uni::to_lower(c);
      break;
    default:
      break;  // keep as written
  }
  return uni::to_utf8(u);
}

// 4. InCa round trip across random-cased lines and random vocabularies.
Outcome criterion_4() {
  const std::vector<std::string> words = {
      "praha",  "kyjev", "nato", "wifi", "telefon", "слово", "київ",
      "мова",   "ok",    "gb",   "iphone", "x1",    "42",    "...",
      "čaj",    "řeka",  "їжак", "a-b",  "d'arc",  "їсти",
  };
  SplitMix64 rng(77);
  uint64_t failures = 0, trips = 0;
  for (int round = 0; round < 100; ++round) {
    VocabTrainer trainer;
    for (int l = 0; l < 30; ++l) {
      std::string line;
      size_t n = 2 + rng.next_below(8);
      for (size_t w = 0; w < n; ++w) {
        if (!line.empty()) line += ' ';
        line += random_casing(words[rng.next_below(words.size())], rng);
      }
      trainer.add_line(line);
    }
    CasingVocabulary vocab = trainer.finish(1 + rng.next_below(3));
    for (int l = 0; l < 100; ++l) {
      std::string line;
      size_t n = 1 + rng.next_below(12);
      for (size_t w = 0; w < n; ++w) {
        if (!line.empty()) line += rng.next_below(8) ? " " : "  ";
        line += random_casing(words[rng.next_below(words.size())], rng);
      }
      IncaDecodeResult back = inca_decode(inca_encode(line, vocab), vocab);
      if (back.error != IncaError::kOk || back.text != line) ++failures;
      ++trips;
    }
  }
  Outcome o;
  o.pass = failures == 0;
  o.detail = fmt("InCa round trip: %llu lines across 100 random vocabularies, "
                 "%llu failures (limit 0)",
                 (unsigned long long)trips, (unsigned long long)failures);
  return o;
}

// 5. Twelve-pair fixture: every rejection reason exactly once, exact stats,
// and XLEnt-tagged copies of the langid and ratio offenders are kept.
Outcome criterion_5() {
  FilterConfig cfg;
  RuleSet rs = shipped_rules();
  Detector det = make_detector(pair_model());

  const std::vector<PairRecord> records = {
      {"Vidím velkou kočku na zahradě.", "Я бачу великого кота в саду.", ""},
      {"Dobrý den vám", "Добрий день усім присутнім у цій залі", "XLEnt"},
      {"Vstupenka stojí 100 Kč.", "Квиток коштує 100 крон.", ""},
      {"Praha je krásné město v Evropě.", "Прага є красивим містом у Європі.", ""},
      {"Ahoj\x07", "Привіт усім людям.", ""},
      {"Я їду додому зараз.", "Я їду додому зараз.", ""},
      {"Jedeme domů hned teď.", "Jedeme domů hned teď.", ""},
      {"Tohle je opravdu velmi dlouhá česká věta o počasí.", "Дуже коротке.", ""},
      {"Napište nám na adresu info@example.com dnes.", "Напишіть нам сьогодні ввечері.",
       ""},
      {"Podrobnosti najdete na https://example.com dnes.",
       "Деталі дивіться на нашому сайті завтра.", ""},
      {"Vstupenka stojí 250 Kč.", "Квиток коштує дуже багато.", ""},
      {"Jedu do Prahy zítra ráno.", "Я їду завтра вранці додому.", ""},
  };
  const std::vector<std::string> expected = {
      "", "", "", "",
      "printability", "langid-src", "langid-tgt", "ratio",
      "email-mismatch", "url-mismatch", "currency-mismatch",
      std::string(kLexiconReason)};

  FilterStats stats;
  uint64_t mismatches = 0;
  for (size_t i = 0; i < records.size(); ++i) {
    FilterDecision d = filter_pair(records[i], cfg, det, rs);
    if (d.kept != expected[i].empty()) ++mismatches;
    if (!expected[i].empty() && d.reason != expected[i]) ++mismatches;
    stats.count(d);
  }
  bool stats_ok = stats.total == 12 && stats.kept == 4 && stats.rejected.size() == 8 &&
                  stats.kept + stats.rejected_total() == stats.total;
  for (const auto& [reason, n] : stats.rejected) stats_ok = stats_ok && n == 1;

  uint64_t exempt_kept = 0;
  for (size_t i : {size_t{5}, size_t{6}, size_t{7}}) {
    PairRecord copy = records[i];
    copy.corpus_tag = "XLEnt";
    exempt_kept += filter_pair(copy, cfg, det, rs).kept;
  }

  Outcome o;
  o.pass = mismatches == 0 && stats_ok && exempt_kept == 3;
  o.detail = fmt("twelve-pair fixture: %llu decision mismatches, stats %s, "
                 "XLEnt copies kept %llu/3",
                 (unsigned long long)mismatches, stats_ok ? "exact" : "WRONG",
                 (unsigned long long)exempt_kept);
  return o;
}

// 6. Threshold boundaries, bit-exact and counted in Unicode scalars.
Outcome criterion_6() {
  FilterConfig cfg;
  Detector none;
  RuleSet empty;
  auto pair_kept = [&](std::string_view s, size_t ls, std::string_view tpiece, size_t lt) {
    PairRecord r{repeat(s, ls), repeat(tpiece, lt), ""};
    return filter_pair(r, cfg, none, empty).kept;
  };
  bool ratio_ok = pair_kept("a", 67, "b", 100) && !pair_kept("a", 66, "b", 100) &&
                  pair_kept("a", 30, "b", 20) && !pair_kept("a", 31, "b", 20) &&
                  pair_kept("є", 67, "і", 100) && !pair_kept("є", 66, "і", 100);
  bool uk_ok = filter_mono(repeat("а", 299), MonoLang::kUk, cfg).kept &&
               !filter_mono(repeat("а", 300), MonoLang::kUk, cfg).kept;
  bool cs_ok = filter_mono(repeat("a", 1400), MonoLang::kCs, cfg).kept &&
               !filter_mono(repeat("a", 1401), MonoLang::kCs, cfg).kept;
  Outcome o;
  o.pass = ratio_ok && uk_ok && cs_ok;
  o.detail = fmt("thresholds: ratio 0.67/1.5 inclusive %s, uk 299/300 %s, "
                 "cs 1400/1401 %s",
                 ratio_ok ? "exact" : "WRONG", uk_ok ? "exact" : "WRONG",
                 cs_ok ? "exact" : "WRONG");
  return o;
}

// 7. Streaming DCE selection equals the full-sort oracle; worked score
// values are exact.
Outcome criterion_7() {
  bool formula = dce_score(1.0, 1.0) == 1.0 && dce_score(2.0, 0.0) == 3.0;

  SplitMix64 rng(1234);
  std::vector<ScoredPair> records;
  for (int i = 0; i < 1000; ++i) {
    records.push_back({"r" + std::to_string(i),
                       static_cast<double>(rng.next_below(40)) / 10.0,
                       static_cast<double>(rng.next_below(40)) / 10.0});
  }
  auto oracle = [&](uint64_t n) {
    std::vector<std::pair<double, uint64_t>> scored;
    for (size_t i = 0; i < records.size(); ++i) {
      scored.emplace_back(dce_score(records[i].fwd, records[i].bwd), i);
    }
    std::sort(scored.begin(), scored.end());
    if (scored.size() > n) scored.resize(n);
    std::vector<uint64_t> idx;
    for (auto& [s, i] : scored) idx.push_back(i);
    std::sort(idx.begin(), idx.end());
    return idx;
  };

  uint64_t mismatches = 0;
  for (int trial = 0; trial < 20; ++trial) {
    uint64_t n = 1 + rng.next_below(1200);
    SelectOutcome got = select(records, DceConfig::top(n));
    if (got.indices != oracle(n)) ++mismatches;
  }
  Outcome o;
  o.pass = formula && mismatches == 0;
  o.detail = fmt("DCE: streaming equals sort oracle on 1000 records x 20 n values "
                 "(%llu mismatches), score examples %s",
                 (unsigned long long)mismatches, formula ? "exact" : "WRONG");
  return o;
}

// 8. Noise: byte-identical reruns through the binary at several worker
// counts, zero probabilities change nothing, empirical rates track p.
Outcome criterion_8() {
  std::ostringstream buf;
  for (int i = 0; i < 20000; ++i) buf << "Pěkná věta číslo " << i << " má dost slov.\n";
  spew(kTmp / "n_in.txt", buf.str());
  const std::string probs = " --p-drop-initial-cap 0.4 --p-lowercase-all 0.2"
                            " --p-uppercase-span 0.1 --p-drop-final-punct 0.3"
                            " --p-add-punct 0.2";
  bool runs_ok = true;
  for (const char* j : {"1", "4"}) {
    for (const char* tag : {"a", "b"}) {
      std::string out = (kTmp / ("n_" + std::string(j) + tag + ".txt")).string();
      runs_ok = runs_ok && run("noise --seed 5 -j " + std::string(j) + probs + " -i " +
                               (kTmp / "n_in.txt").string() + " -o " + out) == 0;
    }
  }
  bool identical = runs_ok && same_file(kTmp / "n_1a.txt", kTmp / "n_1b.txt") &&
                   same_file(kTmp / "n_4a.txt", kTmp / "n_4b.txt") &&
                   same_file(kTmp / "n_1a.txt", kTmp / "n_4a.txt");
  bool changed = runs_ok && !same_file(kTmp / "n_in.txt", kTmp / "n_1a.txt");

  std::string zero = " --p-drop-initial-cap 0 --p-lowercase-all 0 --p-uppercase-span 0"
                     " --p-drop-final-punct 0 --p-add-punct 0";
  bool zero_ok = run("noise --seed 5" + zero + " -i " + (kTmp / "n_in.txt").string() +
                     " -o " + (kTmp / "n_zero.txt").string()) == 0 &&
                 same_file(kTmp / "n_in.txt", kTmp / "n_zero.txt");

  // One rule active at a time: the observed change rate is that rule's rate.
  const std::string template_line = "Velká dobrá věta se dnes povedla.";
  const double ps[5] = {0.30, 0.10, 0.05, 0.25, 0.15};
  double worst = 0.0;
  for (int rule = 0; rule < 5; ++rule) {
    NoiseConfig cfg;
    cfg.p_drop_initial_cap = rule == 0 ? ps[0] : 0.0;
    cfg.p_lowercase_all = rule == 1 ? ps[1] : 0.0;
    cfg.p_uppercase_span = rule == 2 ? ps[2] : 0.0;
    cfg.p_drop_final_punct = rule == 3 ? ps[3] : 0.0;
    cfg.p_add_punct = rule == 4 ? ps[4] : 0.0;
    cfg.global_seed = 100 + rule;
    uint64_t fired = 0;
    const int kLines = 100000;
    for (int i = 0; i < kLines; ++i) {
      if (noise_line(template_line, cfg, line_seed(cfg.global_seed, i)) != template_line)
        ++fired;
    }
    worst = std::max(worst, std::abs(double(fired) / kLines - ps[rule]));
  }

  Outcome o;
  o.pass = identical && changed && zero_ok && worst <= 0.01;
  o.detail = fmt("noise: reruns byte-identical at -j1/-j4 %s, zero-p identity %s, "
                 "max rate error %.4f over 100000 lines (limit 0.01)",
                 identical ? "yes" : "NO", zero_ok ? "yes" : "NO", worst);
  return o;
}

// 9. Language-id accuracy on held-out samples and the script-gate invariant.
Outcome criterion_9() {
  LangIdModel m = LangIdModel::train({{"cs", testsupport::make_corpus("cs", 11, 1000)},
                                      {"uk", testsupport::make_corpus("uk", 22, 1000)},
                                      {"ru", testsupport::make_corpus("ru", 33, 1000)}});
  auto accuracy = [&](const std::string& lang, uint64_t seed) {
    std::vector<std::string> held = testsupport::make_corpus(lang, seed, 1000);
    uint64_t hits = 0;
    for (const std::string& line : held) {
      auto d = m.detect(line);
      if (d && d->lang == lang) ++hits;
    }
    return double(hits) / held.size();
  };
  double cs = accuracy("cs", 2001);
  double uk = accuracy("uk", 2003);
  double ru = accuracy("ru", 2004);

  uint64_t gate_violations = 0;
  for (const std::string& line : testsupport::make_corpus("cs", 3001, 5000)) {
    auto d = m.detect(line);
    if (!d || d->lang != "cs" || d->confidence != 1.0) ++gate_violations;
  }
  for (const std::string& lang : {std::string("uk"), std::string("ru")}) {
    for (const std::string& line :
         testsupport::make_corpus(lang, lang == "uk" ? 3002 : 3003, 2500)) {
      auto d = m.detect(line);
      if (!d || d->lang == "cs") ++gate_violations;
    }
  }

  Outcome o;
  o.pass = cs >= 0.99 && uk >= 0.90 && ru >= 0.90 && gate_violations == 0;
  o.detail = fmt("langid held-out: cs %.1f%% (needs 99), uk %.1f%% / ru %.1f%% "
                 "(need 90), script gate violations %llu/10000",
                 cs * 100, uk * 100, ru * 100, (unsigned long long)gate_violations);
  return o;
}

// 10. Throughput: single-threaded romanization pace, and filter-parallel
// scaling from one to four workers with byte-identical output.
Outcome criterion_10() {
  const TranslitTable& t = TranslitTable::czech();
  std::vector<std::string> sentences = testsupport::make_corpus("uk", 424242, 100000);
  size_t sink = 0;
  auto start = Clock::now();
  for (const std::string& s : sentences) sink += romanize(s, t).size();
  double rom_secs = seconds_since(start);
  bool rom_ok = rom_secs < 5.0 && sink > 0;

  // A million synthetic pairs with matched word counts, so nearly all of
  // them travel the whole pipeline (langid, ratio, rules).
  const auto& csp = testsupport::word_pool("cs");
  const auto& ukp = testsupport::word_pool("uk");
  SplitMix64 rng(31337);
  auto cap_first = [](std::string word) {
    std::u32string u = uni::to_u32(word);
    u[0] = uni::to_upper(u[0]);
    return uni::to_utf8(u);
  };
  {
    std::ofstream out(kTmp / "scale.tsv", std::ios::binary);
    for (int i = 0; i < 1000000; ++i) {
      size_t n = 4 + rng.next_below(8);
      std::string cs, uk;
      for (size_t w = 0; w < n; ++w) {
        if (w) {
          cs += ' ';
          uk += ' ';
        }
        std::string cw = csp[rng.next_below(csp.size())];
        std::string uw = ukp[rng.next_below(ukp.size())];
        cs += w == 0 ? cap_first(cw) : cw;
        uk += w == 0 ? cap_first(uw) : uw;
      }
      out << cs << ".\t" << uk << ".\n";
    }
  }
  pair_model().save_file((kTmp / "scale.model").string());
  const std::string args = " -i " + (kTmp / "scale.tsv").string() +
                           " --rules " UKCS_SOURCE_DIR "/data/rules/default.rules" +
                           " --lexicon " UKCS_SOURCE_DIR "/data/rules/municipalities.tsv" +
                           " --langid-model " + (kTmp / "scale.model").string();

  auto timed_run = [&](const char* workers, const char* outname) {
    auto t0 = Clock::now();
    int rc = run("filter-parallel -j " + std::string(workers) + args + " -o " +
                 (kTmp / outname).string());
    return rc == 0 ? seconds_since(t0) : -1.0;
  };
  double t1 = timed_run("1", "scale_1.tsv");
  double t4 = timed_run("4", "scale_4.tsv");
  bool identical = t1 > 0 && t4 > 0 && same_file(kTmp / "scale_1.tsv", kTmp / "scale_4.tsv");
  double speedup = (t1 > 0 && t4 > 0) ? t1 / t4 : 0.0;
  bool scale_ok = identical && speedup >= 3.0;

  for (const char* f : {"scale.tsv", "scale_1.tsv", "scale_4.tsv"}) {
    fs::remove(kTmp / f);
  }

  unsigned hw = std::thread::hardware_concurrency();
  Outcome o;
  o.pass = rom_ok && scale_ok;
  o.env_limited = rom_ok && identical && !scale_ok && hw < 4;
  o.detail = fmt("romanize 100000 sentences in %.2f s (limit 5 s); filter-parallel "
                 "1->4 workers %.2fx speedup (needs 3.0x), outputs %s "
                 "[%.1f s vs %.1f s, %u hardware thread%s]",
                 rom_secs, speedup, identical ? "byte-identical" : "DIFFER", t1, t4,
                 hw, hw == 1 ? "" : "s");
  return o;
}

}  // namespace

int main() {
  fs::remove_all(kTmp);
  fs::create_directories(kTmp);

  Outcome (*criteria[])() = {criterion_1, criterion_2, criterion_3, criterion_4,
                             criterion_5, criterion_6, criterion_7, criterion_8,
                             criterion_9, criterion_10};
  int passed = 0, env_limited = 0, failed = 0;
  for (int i = 0; i < 10; ++i) {
    Outcome o = criteria[i]();
    const char* verdict = o.pass ? "PASS" : "FAIL";
    std::printf("[%2d] %s  %s%s\n", i + 1, verdict, o.detail.c_str(),
                !o.pass && o.env_limited ? " [environment-limited]" : "");
    std::fflush(stdout);
    if (o.pass) {
      ++passed;
    } else if (o.env_limited) {
      ++env_limited;
    } else {
      ++failed;
    }
  }

  std::printf("%d/10 passed, %d failed, %d environment-limited\n", passed, failed,
              env_limited);
  if (env_limited > 0) {
    std::printf("environment-limited criteria need >= 4 hardware threads; this host "
                "has %u, so the result is expected here and would be a real failure "
                "on capable hardware\n",
                std::thread::hardware_concurrency());
  }
  return failed > 0 ? 1 : 0;
}
