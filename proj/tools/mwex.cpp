// Copyright 2026 The mwex Authors.
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

// mwex: multiword expression extraction, evaluation and review.

#include <csignal>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mwe/error.hpp"
#include "mwe/evaluation.hpp"
#include "mwe/gold_store.hpp"
#include "mwe/pipeline.hpp"
#include "mwe/service.hpp"
#include "mwe/text_io.hpp"

namespace {

mwe::HttpServer* g_server = nullptr;

void on_signal(int) {
  if (g_server) g_server->stop();
}

int cmd_extract(const std::string& config_path, bool dump_stages, const std::string& scope_name) {
  auto cfg = mwe::PipelineConfig::load(config_path);
  mwe::RunOptions options;
  options.dump_stages = dump_stages;
  if (!scope_name.empty()) {
    options.stats_scope = mwe::parse_stats_scope(scope_name);
    if (!options.stats_scope) throw mwe::Error("--stats-scope must be candidates or all");
  }
  if (dump_stages && cfg.dump_dir.empty()) throw mwe::Error("--dump-stages needs dump_dir in the config");

  const auto result = mwe::run_pipeline(cfg, options);
  const auto tsv = mwe::format_ranked_tsv(result.ranked);
  if (cfg.output.empty()) {
    std::cout << tsv;
  } else {
    if (cfg.output.has_parent_path()) std::filesystem::create_directories(cfg.output.parent_path());
    mwe::write_file(cfg.output, tsv);
  }
  for (const auto& s : result.stages) {
    std::cerr << s.name << '\t' << mwe::to_string(s.kind) << '\t' << s.before << " -> " << s.after << '\n';
  }
  std::cerr << "ranked " << result.ranked.ranked.size() << ", unscored " << result.ranked.unscored.size()
            << '\n';
  return 0;
}

int cmd_eval(const std::string& ranked_path, const std::string& gold_path, long long k, bool json) {
  if (k <= 0) throw mwe::Error("--k must be positive");
  const auto rows = mwe::parse_ranked_tsv(mwe::read_file(ranked_path), ranked_path);
  const auto gold = mwe::GoldStore::load(gold_path);
  const auto report = mwe::evaluate(rows, gold, static_cast<std::size_t>(k));
  if (json) {
    std::cout << mwe::to_json(report).dump(2) << '\n';
  } else {
    std::cout << mwe::format_report(report);
  }
  return 0;
}

int cmd_serve(const std::string& config_path, int port, const std::string& host) {
  auto cfg = mwe::PipelineConfig::load(config_path);
  cfg.validate();
  const auto resources = mwe::PipelineResources::load(cfg);
  auto result = mwe::run_pipeline(cfg, resources);
  auto gold = mwe::GoldStore::load(cfg.gold);
  if (!cfg.gold.empty()) gold.save(cfg.gold);  // compact before appending
  mwe::ReviewService service(std::move(result.ranked), resources.lexicon, std::move(gold), cfg.gold);
  mwe::HttpServer server(service);
  g_server = &server;
  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);
  const std::string bind_host = host.empty() ? cfg.serve_host : host;
  const int bind_port = port < 0 ? cfg.serve_port : port;
  std::cerr << "run " << service.run_id() << " on " << bind_host << ':' << bind_port << '\n';
  server.listen(bind_host, bind_port);
  g_server = nullptr;
  return 0;
}

int cmd_lemmatize(const std::string& word, std::size_t level, const std::string& lexicon_path,
                  const std::string& config_path) {
  std::filesystem::path path = lexicon_path;
  if (path.empty()) {
    if (config_path.empty()) throw mwe::Error("lemmatize needs --lexicon or --config");
    path = mwe::PipelineConfig::load(config_path).lexicon;
    if (path.empty()) throw mwe::Error("config has no lexicon");
  }
  const auto lex = mwe::Lexicon::load(path);
  const auto s = lex.lemmatize(word, level);
  nlohmann::json j{{"stem", s.stem}, {"lemmas", s.lemmas}, {"match_depth", s.match_depth}, {"level", level}};
  std::cout << j.dump() << '\n';
  return 0;
}

int cmd_index(const std::string& dump_path, const std::string& config_path) {
  const auto cfg = mwe::PipelineConfig::load(config_path);
  cfg.validate();
  const auto tagset = mwe::TagsetMap::load(cfg.tagset);
  const auto corpus = mwe::parse_corpus(cfg.corpus, tagset, cfg.language);
  const auto index = mwe::NGramIndex::build(corpus);
  std::ofstream out(dump_path, std::ios::binary);
  if (!out) throw mwe::IoError("cannot write " + dump_path);
  index.dump(out);
  if (!out.flush()) throw mwe::IoError("write failed for " + dump_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiword expression extraction and review"};
  app.require_subcommand(1);

  std::string config_path;
  bool dump_stages = false;
  std::string scope;
  auto* extract = app.add_subcommand("extract", "run the pipeline and write the ranked list");
  extract->add_option("--config", config_path, "key=value config file")->required();
  extract->add_flag("--dump-stages", dump_stages, "write per-stage candidate dumps to dump_dir");
  extract->add_option("--stats-scope", scope, "candidates|all");

  std::string ranked_path, gold_path;
  long long k = 200;
  bool json = false;
  auto* eval = app.add_subcommand("eval", "precision@k of a ranked list against a gold store");
  eval->add_option("--ranked", ranked_path, "ranked TSV")->required();
  eval->add_option("--gold", gold_path, "gold JSONL")->required();
  eval->add_option("--k", k, "cut-off")->capture_default_str();
  eval->add_flag("--json", json, "JSON report");

  int port = -1;
  std::string host;
  auto* serve = app.add_subcommand("serve", "serve the review API");
  serve->add_option("--config", config_path, "key=value config file")->required();
  serve->add_option("--port", port, "listen port (default serve.port)");
  serve->add_option("--host", host, "listen address (default serve.host)");

  std::string word, lexicon_path;
  std::size_t level = 0;
  auto* lemmatize = app.add_subcommand("lemmatize", "trie stem and lemma suggestions");
  lemmatize->add_option("--word", word, "surface form")->required();
  lemmatize->add_option("--level", level, "backtracking level");
  lemmatize->add_option("--lexicon", lexicon_path, "lexicon TSV");
  lemmatize->add_option("--config", config_path, "config whose lexicon to use");

  std::string dump_path;
  auto* index = app.add_subcommand("index", "dump n-gram counts");
  index->add_option("--dump", dump_path, "output path")->required();
  index->add_option("--config", config_path, "key=value config file")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*extract) return cmd_extract(config_path, dump_stages, scope);
    if (*eval) return cmd_eval(ranked_path, gold_path, k, json);
    if (*serve) return cmd_serve(config_path, port, host);
    if (*lemmatize) return cmd_lemmatize(word, level, lexicon_path, config_path);
    if (*index) return cmd_index(dump_path, config_path);
  } catch (const std::exception& e) {
    std::cerr << "mwex: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
