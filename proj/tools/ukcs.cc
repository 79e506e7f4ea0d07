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

// ukcs: command-line frontend over the corpus toolkit. Subcommands stream
// lines stdin to stdout (or --input/--output), preserve input order under
// --workers N, and exit 0 on success, 1 on usage or configuration errors,
// 2 on data faults in --strict mode (--lenient counts and skips instead).

#include <atomic>
#include <condition_variable>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ukcs/config.h"
#include "ukcs/dce.h"
#include "ukcs/filter.h"
#include "ukcs/inca.h"
#include "ukcs/langid.h"
#include "ukcs/noise.h"
#include "ukcs/pipeline.h"
#include "ukcs/textmodel.h"
#include "ukcs/translit.h"
#include "ukcs/version.h"

namespace {

using json = nlohmann::json;
using namespace ukcs;

// Thrown by the streaming phase; everything else maps to a config error.
struct DataFault : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename Fn>
auto run_phase(Fn&& fn) {
  try {
    return fn();
  } catch (const DataFault&) {
    throw;
  } catch (const std::exception& e) {
    throw DataFault(e.what());
  }
}

struct Io {
  std::ifstream fin;
  std::ofstream fout;
  std::istream* in = &std::cin;
  std::ostream* out = &std::cout;

  void open(const std::string& input, const std::string& output) {
    if (!input.empty() && input != "-") {
      fin.open(input, std::ios::binary);
      if (!fin) throw std::runtime_error("cannot open input file: " + input);
      in = &fin;
    }
    if (!output.empty() && output != "-") {
      fout.open(output, std::ios::binary);
      if (!fout) throw std::runtime_error("cannot open output file: " + output);
      out = &fout;
    }
  }
};

json config_to_json(const PipelineConfig& c) {
  return json{
      {"general", {{"workers", c.workers}, {"stats_out", c.stats_out}}},
      {"filter",
       {{"ratio_min", c.filter.ratio_min},
        {"ratio_max", c.filter.ratio_max},
        {"ratio_min_length_chars", c.filter.ratio_min_length_chars},
        {"mono_max_chars_uk", c.filter.mono_max_chars_uk},
        {"mono_max_chars_cs", c.filter.mono_max_chars_cs},
        {"langid_threshold", c.filter.langid_threshold},
        {"exempt_corpora", c.filter.exempt_corpora},
        {"rules", c.filter_rules},
        {"lexicon", c.filter_lexicon},
        {"langid_model", c.filter_langid_model}}},
      {"noise",
       {{"p_drop_initial_cap", c.noise.p_drop_initial_cap},
        {"p_lowercase_all", c.noise.p_lowercase_all},
        {"p_uppercase_span", c.noise.p_uppercase_span},
        {"p_drop_final_punct", c.noise.p_drop_final_punct},
        {"p_add_punct", c.noise.p_add_punct},
        {"seed", c.noise.global_seed}}},
      {"romanize", {{"table", c.romanize_table}}},
      {"inca", {{"vocabulary", c.inca_vocabulary}}},
      {"langid", {{"model", c.langid_model}}}};
}

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

// Sharded casing-vocabulary training: each worker counts its own blocks,
// the counts merge order-independently.
VocabTrainer train_vocab(std::istream& in, unsigned workers) {
  std::vector<VocabTrainer> trainers(workers);
  auto feed = [](VocabTrainer& t, std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    t.add_line(line);
  };
  if (workers == 1) {
    std::string line;
    while (std::getline(in, line)) feed(trainers[0], std::move(line));
  } else {
    std::mutex mu;
    std::condition_variable cv_task, cv_space;
    std::deque<std::vector<std::string>> queue;
    bool done_reading = false;
    const size_t cap = workers * 4;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (;;) {
          std::vector<std::string> block;
          {
            std::unique_lock<std::mutex> lock(mu);
            cv_task.wait(lock, [&] { return done_reading || !queue.empty(); });
            if (queue.empty()) return;
            block = std::move(queue.front());
            queue.pop_front();
          }
          cv_space.notify_one();
          for (auto& line : block) feed(trainers[w], std::move(line));
        }
      });
    }
    std::vector<std::string> block;
    std::string line;
    while (std::getline(in, line)) {
      block.push_back(std::move(line));
      if (block.size() == 4096) {
        std::unique_lock<std::mutex> lock(mu);
        cv_space.wait(lock, [&] { return queue.size() < cap; });
        queue.push_back(std::move(block));
        block.clear();
        cv_task.notify_one();
      }
    }
    {
      std::unique_lock<std::mutex> lock(mu);
      if (!block.empty()) queue.push_back(std::move(block));
      done_reading = true;
    }
    cv_task.notify_all();
    for (auto& t : pool) t.join();
  }
  VocabTrainer total = std::move(trainers[0]);
  for (size_t w = 1; w < trainers.size(); ++w) total.absorb(std::move(trainers[w]));
  return total;
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Czech-Ukrainian corpus preprocessing toolkit"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string config_path, input, output;
  unsigned workers_flag = 0;
  std::string stats_flag;
  bool lenient = false;
  auto* opt_config = app.add_option("--config", config_path,
                                    "Config file (default: $UKCS_CONFIG)");
  app.add_option("-i,--input", input, "Input file (default: stdin)");
  app.add_option("-o,--output", output, "Output file (default: stdout)");
  auto* opt_workers = app.add_option("-j,--workers", workers_flag,
                                     "Parallel workers (default: 1)");
  auto* opt_stats = app.add_option("--stats-out", stats_flag,
                                   "Write a JSON stats document to this path");
  auto* opt_lenient =
      app.add_flag("--lenient", lenient, "Count and skip data faults");
  app.add_flag("--strict", "Abort on data faults (default)")->excludes(opt_lenient);

  std::string table_flag;
  auto* cmd_rom = app.add_subcommand("romanize", "Cyrillic to Czech Latin, reversible");
  auto* opt_rom_table = cmd_rom->add_option("--table", table_flag, "Custom table file");
  auto* cmd_derom = app.add_subcommand("deromanize", "Invert romanize");
  auto* opt_derom_table =
      cmd_derom->add_option("--table", table_flag, "Custom table file");

  uint64_t min_count = 2;
  std::string vocab_source;
  auto* cmd_inca_train =
      app.add_subcommand("inca-train", "Count casing variants into a vocabulary");
  cmd_inca_train->add_option("--min-count", min_count,
                             "Keep keys seen at least this often (default: 2)");
  cmd_inca_train->add_option("--source", vocab_source, "Vocabulary source label");

  std::string vocab_flag;
  auto* cmd_inca_enc = app.add_subcommand("inca-encode", "Lowercase with casing tags");
  auto* opt_enc_vocab =
      cmd_inca_enc->add_option("--vocabulary", vocab_flag, "Vocabulary file");
  auto* cmd_inca_dec = app.add_subcommand("inca-decode", "Invert inca-encode");
  auto* opt_dec_vocab =
      cmd_inca_dec->add_option("--vocabulary", vocab_flag, "Vocabulary file");

  uint64_t seed_flag = 0;
  double p_dic = 0, p_la = 0, p_us = 0, p_dfp = 0, p_ap = 0;
  auto* cmd_noise = app.add_subcommand("noise", "Seeded casing/punctuation noise");
  auto* opt_seed = cmd_noise->add_option("--seed", seed_flag, "Global seed");
  auto* opt_p_dic =
      cmd_noise->add_option("--p-drop-initial-cap", p_dic, "Rule probability");
  auto* opt_p_la =
      cmd_noise->add_option("--p-lowercase-all", p_la, "Rule probability");
  auto* opt_p_us =
      cmd_noise->add_option("--p-uppercase-span", p_us, "Rule probability");
  auto* opt_p_dfp =
      cmd_noise->add_option("--p-drop-final-punct", p_dfp, "Rule probability");
  auto* opt_p_ap = cmd_noise->add_option("--p-add-punct", p_ap, "Rule probability");

  std::string corpus_tag, rules_flag, lexicon_flag, fmodel_flag;
  double rmin_flag = 0, rmax_flag = 0, lthresh_flag = 0;
  auto* cmd_fpar =
      app.add_subcommand("filter-parallel", "Filter src<TAB>tgt pair records");
  cmd_fpar->add_option("--corpus-tag", corpus_tag,
                       "Corpus name, checked against the exemption list");
  auto* opt_rules = cmd_fpar->add_option("--rules", rules_flag, "Rule file");
  auto* opt_lexicon = cmd_fpar->add_option("--lexicon", lexicon_flag, "Lexicon file");
  auto* opt_fmodel =
      cmd_fpar->add_option("--langid-model", fmodel_flag, "Language-ID model file");
  auto* opt_rmin = cmd_fpar->add_option("--ratio-min", rmin_flag, "Length ratio floor");
  auto* opt_rmax = cmd_fpar->add_option("--ratio-max", rmax_flag, "Length ratio cap");
  auto* opt_lthresh = cmd_fpar->add_option("--langid-threshold", lthresh_flag,
                                           "Minimum detection confidence");

  std::string mono_lang;
  auto* cmd_fmono = app.add_subcommand("filter-mono", "Filter monolingual lines");
  cmd_fmono->add_option("--lang", mono_lang, "Side being filtered")
      ->required()
      ->check(CLI::IsMember({"cs", "uk"}));

  std::vector<std::string> lang_args;
  int train_k = LangIdModel::kDefaultK;
  auto* cmd_lid_train =
      app.add_subcommand("langid-train", "Train character n-gram profiles");
  cmd_lid_train
      ->add_option("--lang", lang_args, "code=corpus-file (repeat per language)")
      ->required();
  cmd_lid_train->add_option("-k,--top-k", train_k, "Profile length (default: 3000)");

  std::string lmodel_flag;
  auto* cmd_lid = app.add_subcommand("langid", "Label lines with lang<TAB>confidence");
  auto* opt_lmodel = cmd_lid->add_option("--model", lmodel_flag, "Model file");

  std::string scores_path, bitext_path;
  uint64_t top_n_flag = 0, authentic_flag = 0;
  double ratio_flag = 0;
  auto* cmd_dce =
      app.add_subcommand("dce-select", "Top-N selection by dual cross-entropy");
  cmd_dce->add_option("--scores", scores_path, "id<TAB>fwd<TAB>bwd file")->required();
  auto* opt_top_n = cmd_dce->add_option("--top-n", top_n_flag, "Keep the best N");
  auto* opt_ratio =
      cmd_dce->add_option("--ratio", ratio_flag, "Keep ratio x authentic-count");
  auto* opt_authentic =
      cmd_dce->add_option("--authentic-count", authentic_flag, "Authentic pair count");
  cmd_dce->add_option("--bitext", bitext_path,
                      "Emit these lines (joined by line index) instead of ids");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  // Setup phase: resolve configuration and load artifacts. Failures here are
  // configuration errors (exit 1).
  if (opt_config->count() == 0) {
    if (const char* env = std::getenv("UKCS_CONFIG")) config_path = env;
  }
  PipelineConfig cfg;
  if (!config_path.empty()) cfg = PipelineConfig::load_file(config_path);
  if (opt_workers->count() > 0) cfg.workers = workers_flag;
  if (opt_stats->count() > 0) cfg.stats_out = stats_flag;
  if (opt_rom_table->count() > 0 || opt_derom_table->count() > 0)
    cfg.romanize_table = table_flag;
  if (opt_enc_vocab->count() > 0 || opt_dec_vocab->count() > 0)
    cfg.inca_vocabulary = vocab_flag;
  if (opt_seed->count() > 0) cfg.noise.global_seed = seed_flag;
  if (opt_p_dic->count() > 0) cfg.noise.p_drop_initial_cap = p_dic;
  if (opt_p_la->count() > 0) cfg.noise.p_lowercase_all = p_la;
  if (opt_p_us->count() > 0) cfg.noise.p_uppercase_span = p_us;
  if (opt_p_dfp->count() > 0) cfg.noise.p_drop_final_punct = p_dfp;
  if (opt_p_ap->count() > 0) cfg.noise.p_add_punct = p_ap;
  if (opt_rules->count() > 0) cfg.filter_rules = rules_flag;
  if (opt_lexicon->count() > 0) cfg.filter_lexicon = lexicon_flag;
  if (opt_fmodel->count() > 0) cfg.filter_langid_model = fmodel_flag;
  if (opt_rmin->count() > 0) cfg.filter.ratio_min = rmin_flag;
  if (opt_rmax->count() > 0) cfg.filter.ratio_max = rmax_flag;
  if (opt_lthresh->count() > 0) cfg.filter.langid_threshold = lthresh_flag;
  if (opt_lmodel->count() > 0) cfg.langid_model = lmodel_flag;
  cfg.validate();

  const bool strict = !lenient;
  const ParallelOptions par{cfg.workers, 2048};
  Io io;
  io.open(input, output);
  std::atomic<uint64_t> skipped{0};

  CLI::App* sub = app.get_subcommands().front();
  MapResult mres;
  json extra = json::object();

  if (sub == cmd_rom || sub == cmd_derom) {
    const TranslitTable* table = &TranslitTable::czech();
    std::optional<TranslitTable> custom;
    if (!cfg.romanize_table.empty()) {
      custom = TranslitTable::load_file(cfg.romanize_table);
      table = &*custom;
    }
    LineMapper mapper;
    if (sub == cmd_rom) {
      mapper = [&](uint64_t, const std::string& line) {
        return std::optional<std::string>(romanize(line, *table));
      };
    } else {
      mapper = [&](uint64_t index, const std::string& line) -> std::optional<std::string> {
        DeromanizeResult r = deromanize(line, *table);
        if (r.error != TranslitError::kOk) {
          if (strict) {
            throw DataFault("record " + std::to_string(index + 1) +
                            ": unbalanced delimiter");
          }
          ++skipped;
          return std::nullopt;
        }
        return std::optional<std::string>(std::move(r.text));
      };
    }
    mres = run_phase([&] { return map_lines(*io.in, *io.out, mapper, par); });
  } else if (sub == cmd_inca_train) {
    VocabTrainer trained = run_phase([&] { return train_vocab(*io.in, cfg.workers); });
    CasingVocabulary vocab = trained.finish(min_count, vocab_source);
    vocab.save(*io.out);
    mres.lines_in = trained.lines_seen();
    extra["entries"] = vocab.size();
  } else if (sub == cmd_inca_enc || sub == cmd_inca_dec) {
    CasingVocabulary vocab;
    if (!cfg.inca_vocabulary.empty()) {
      vocab = CasingVocabulary::load_file(cfg.inca_vocabulary);
    }
    LineMapper mapper;
    if (sub == cmd_inca_enc) {
      mapper = [&](uint64_t, const std::string& line) {
        return std::optional<std::string>(inca_encode(line, vocab));
      };
    } else {
      mapper = [&](uint64_t index, const std::string& line) -> std::optional<std::string> {
        IncaDecodeResult r = inca_decode(line, vocab);
        if (r.error != IncaError::kOk) {
          if (strict) {
            throw DataFault("record " + std::to_string(index + 1) +
                            ": dangling casing tag");
          }
          ++skipped;
          return std::nullopt;
        }
        return std::optional<std::string>(std::move(r.text));
      };
    }
    mres = run_phase([&] { return map_lines(*io.in, *io.out, mapper, par); });
  } else if (sub == cmd_noise) {
    const NoiseConfig ncfg = cfg.noise;
    LineMapper mapper = [&ncfg](uint64_t index, const std::string& line) {
      return std::optional<std::string>(
          noise_line(line, ncfg, line_seed(ncfg.global_seed, index)));
    };
    mres = run_phase([&] { return map_lines(*io.in, *io.out, mapper, par); });
  } else if (sub == cmd_fpar) {
    RuleSet rules;
    if (!cfg.filter_rules.empty()) rules = RuleSet::load_file(cfg.filter_rules);
    if (!cfg.filter_lexicon.empty()) rules.add_lexicon_file(cfg.filter_lexicon);
    std::optional<LangIdModel> model;
    Detector detector;
    if (!cfg.filter_langid_model.empty()) {
      model = LangIdModel::load_file(cfg.filter_langid_model);
      detector = make_detector(*model);
    }
    FilterStats fstats;
    std::mutex stats_mu;
    LineMapper mapper = [&](uint64_t index,
                            const std::string& raw) -> std::optional<std::string> {
      std::string cleaned;
      FilterDecision d =
          filter_bitext_line(raw, cfg.filter, detector, rules, corpus_tag, &cleaned);
      if (!d.kept && d.reason == "format" && strict) {
        throw DataFault("bitext record " + std::to_string(index + 1) +
                        ": missing tab separator");
      }
      {
        std::lock_guard<std::mutex> lock(stats_mu);
        fstats.count(d);
      }
      if (!d.kept) {
        if (d.reason == "format") ++skipped;
        return std::nullopt;
      }
      return std::optional<std::string>(std::move(cleaned));
    };
    mres = run_phase([&] { return map_lines(*io.in, *io.out, mapper, par); });
    extra["filter"] = {{"total", fstats.total},
                       {"kept", fstats.kept},
                       {"rejected", fstats.rejected}};
  } else if (sub == cmd_fmono) {
    const MonoLang lang = mono_lang == "uk" ? MonoLang::kUk : MonoLang::kCs;
    FilterStats fstats;
    std::mutex stats_mu;
    LineMapper mapper = [&](uint64_t,
                            const std::string& raw) -> std::optional<std::string> {
      auto decoded = decode_bytes(raw, {.keep_tab = false});
      FilterDecision d = decoded ? filter_mono(decoded->text, lang, cfg.filter)
                                 : FilterDecision::reject("empty");
      {
        std::lock_guard<std::mutex> lock(stats_mu);
        fstats.count(d);
      }
      if (!d.kept) return std::nullopt;
      return std::optional<std::string>(std::move(decoded->text));
    };
    mres = run_phase([&] { return map_lines(*io.in, *io.out, mapper, par); });
    extra["filter"] = {{"total", fstats.total},
                       {"kept", fstats.kept},
                       {"rejected", fstats.rejected}};
  } else if (sub == cmd_lid_train) {
    std::map<std::string, std::vector<Line>> samples;
    json lang_lines = json::object();
    for (const auto& arg : lang_args) {
      size_t eq = arg.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 >= arg.size()) {
        throw std::runtime_error("--lang expects code=file, got \"" + arg + "\"");
      }
      std::string code = arg.substr(0, eq);
      if (samples.count(code)) {
        throw std::runtime_error("duplicate language \"" + code + "\"");
      }
      samples[code] = read_lines(arg.substr(eq + 1));
      lang_lines[code] = samples[code].size();
      mres.lines_in += samples[code].size();
    }
    LangIdModel model = LangIdModel::train(samples, train_k);
    model.save(*io.out);
    extra["k"] = model.k();
    extra["languages"] = lang_lines;
  } else if (sub == cmd_lid) {
    if (cfg.langid_model.empty()) {
      throw std::runtime_error("langid needs a model (--model or [langid] model)");
    }
    LangIdModel model = LangIdModel::load_file(cfg.langid_model);
    LineMapper mapper = [&model](uint64_t, const std::string& line) {
      char buf[64];
      if (auto d = model.detect(line)) {
        std::snprintf(buf, sizeof buf, "%s\t%.4f", d->lang.c_str(), d->confidence);
      } else {
        std::snprintf(buf, sizeof buf, "und\t0.0000");
      }
      return std::optional<std::string>(buf);
    };
    mres = run_phase([&] { return map_lines(*io.in, *io.out, mapper, par); });
  } else if (sub == cmd_dce) {
    DceConfig dcfg;
    if (opt_top_n->count() > 0) {
      if (opt_ratio->count() > 0 || opt_authentic->count() > 0) {
        throw std::runtime_error("--top-n excludes --ratio/--authentic-count");
      }
      dcfg = DceConfig::top(top_n_flag);
    } else if (opt_ratio->count() > 0) {
      if (opt_authentic->count() == 0) {
        throw std::runtime_error("--ratio needs --authentic-count");
      }
      dcfg = DceConfig::ratio_of(ratio_flag, authentic_flag);
    } else {
      throw std::runtime_error("dce-select needs --top-n or --ratio");
    }
    dcfg.resolve_n();
    std::ifstream scores(scores_path, std::ios::binary);
    if (!scores) throw std::runtime_error("cannot open scores file: " + scores_path);
    SelectOutcome outcome = run_phase(
        [&] { return select_scores(scores, dcfg, {strict, scores_path}); });
    if (outcome.stats.clamped) {
      std::cerr << "ukcs: kept all " << outcome.stats.selected
                << " valid records (fewer than requested)\n";
    }
    if (bitext_path.empty()) {
      for (const auto& pair : outcome.kept) *io.out << pair.id << '\n';
    } else {
      std::ifstream bitext(bitext_path, std::ios::binary);
      if (!bitext) throw std::runtime_error("cannot open bitext file: " + bitext_path);
      run_phase([&] {
        std::string line;
        uint64_t index = 0;
        size_t next = 0;
        while (std::getline(bitext, line) && next < outcome.indices.size()) {
          if (index == outcome.indices[next]) {
            *io.out << line << '\n';
            ++next;
          }
          ++index;
        }
        if (next < outcome.indices.size()) {
          if (strict) {
            throw DataFault("bitext ended before record " +
                            std::to_string(outcome.indices[next] + 1));
          }
          skipped += outcome.indices.size() - next;
        }
        return 0;
      });
    }
    mres.lines_in = outcome.stats.total;
    mres.lines_out = outcome.stats.selected;
    extra["dce"] = {{"total", outcome.stats.total},
                    {"excluded", outcome.stats.excluded},
                    {"selected", outcome.stats.selected},
                    {"clamped", outcome.stats.clamped}};
  }

  if (skipped > 0) {
    std::cerr << "ukcs: skipped " << skipped.load() << " records\n";
  }
  if (!cfg.stats_out.empty()) {
    extra["lines_in"] = mres.lines_in;
    extra["lines_out"] = mres.lines_out;
    extra["skipped"] = skipped.load();
    json doc = {{"version", std::string(kVersion)},
                {"command", sub->get_name()},
                {"config", config_to_json(cfg)},
                {"stats", extra}};
    std::ofstream sf(cfg.stats_out, std::ios::binary);
    if (!sf) throw std::runtime_error("cannot open stats file: " + cfg.stats_out);
    sf << doc.dump(2) << "\n";
  }
  io.out->flush();
  if (!*io.out) throw DataFault("error writing output");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const DataFault& e) {
    std::cerr << "ukcs: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "ukcs: " << e.what() << "\n";
    return 1;
  }
}
