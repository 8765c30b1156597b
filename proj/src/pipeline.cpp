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

#include "mwe/pipeline.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <utility>

#include "mwe/error.hpp"
#include "mwe/semantic_filter.hpp"
#include "mwe/text_io.hpp"

namespace mwe {

namespace {

constexpr std::array<std::string_view, 26> kKnownKeys{
    "corpus", "lexicon", "tagset", "vector_verbs", "verbalizers", "named_entities", "rules",
    "cp_rules", "gold", "output", "dump_dir", "language",
    "candidates.adj_noun_bigrams",
    "redup.min_suffix_frac", "redup.max_prefix_delta",
    "filters.ne_penalty", "filters.hyphen_boost", "filters.ne_drop", "filters.complex_predicate",
    "stats.dice_doubled", "stats.min_count", "stats.max_n",
    "pipeline.stats_scope", "report.top_k", "serve.host", "serve.port",
};

std::filesystem::path resolve(const KeyValueConfig& kv, std::string_view key,
                              const std::filesystem::path& base) {
  auto v = kv.get(key);
  if (!v || v->empty()) return {};
  std::filesystem::path p(*v);
  return p.is_absolute() ? p : base / p;
}

template <class Fn>
auto run_stage(std::string_view name, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const std::exception& e) {
    throw Error(std::string(name) + ": " + e.what());
  }
}

std::string optional_number(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string("NA");
}

}  // namespace

std::string_view to_string(StatsScope scope) {
  return scope == StatsScope::All ? "all" : "candidates";
}

std::optional<StatsScope> parse_stats_scope(std::string_view name) {
  if (name == "all") return StatsScope::All;
  if (name == "candidates") return StatsScope::Candidates;
  return std::nullopt;
}

std::string_view to_string(StageKind kind) {
  switch (kind) {
    case StageKind::Source: return "source";
    case StageKind::Add: return "add";
    case StageKind::Drop: return "drop";
    case StageKind::Weight: return "weight";
    case StageKind::Tag: return "tag";
  }
  return "source";
}

// ---------------------------------------------------------------------------
// Configuration

PipelineConfig PipelineConfig::from_settings(const KeyValueConfig& kv, const std::filesystem::path& base) {
  for (const auto& [key, value] : kv.values()) {
    if (std::find(kKnownKeys.begin(), kKnownKeys.end(), key) == kKnownKeys.end()) {
      throw Error("unknown config key '" + key + "'");
    }
  }
  PipelineConfig cfg;
  cfg.corpus = resolve(kv, "corpus", base);
  cfg.lexicon = resolve(kv, "lexicon", base);
  cfg.tagset = resolve(kv, "tagset", base);
  cfg.vector_verbs = resolve(kv, "vector_verbs", base);
  cfg.verbalizers = resolve(kv, "verbalizers", base);
  cfg.named_entities = resolve(kv, "named_entities", base);
  cfg.rules = resolve(kv, "rules", base);
  cfg.cp_rules = resolve(kv, "cp_rules", base);
  cfg.gold = resolve(kv, "gold", base);
  cfg.output = resolve(kv, "output", base);
  cfg.dump_dir = resolve(kv, "dump_dir", base);
  cfg.language = kv.get_string("language", cfg.language);

  cfg.rule_options.adj_noun_bigrams = kv.get_bool("candidates.adj_noun_bigrams", true);
  cfg.redup.min_suffix_frac = kv.get_double("redup.min_suffix_frac", cfg.redup.min_suffix_frac);
  const auto delta = kv.get_int("redup.max_prefix_delta", static_cast<std::int64_t>(cfg.redup.max_prefix_delta));
  if (delta < 0) throw Error("redup.max_prefix_delta must be >= 0");
  cfg.redup.max_prefix_delta = static_cast<std::size_t>(delta);
  cfg.filters.ne_penalty = kv.get_double("filters.ne_penalty", cfg.filters.ne_penalty);
  cfg.filters.hyphen_boost = kv.get_double("filters.hyphen_boost", cfg.filters.hyphen_boost);
  cfg.filters.ne_drop = kv.get_bool("filters.ne_drop", cfg.filters.ne_drop);
  cfg.complex_predicate = kv.get_bool("filters.complex_predicate", cfg.complex_predicate);
  cfg.stats.dice_doubled = kv.get_bool("stats.dice_doubled", cfg.stats.dice_doubled);
  const auto min_count = kv.get_int("stats.min_count", static_cast<std::int64_t>(cfg.stats.min_count));
  if (min_count < 1) throw Error("stats.min_count must be >= 1");
  cfg.stats.min_count = static_cast<std::uint64_t>(min_count);
  const auto max_n = kv.get_int("stats.max_n", static_cast<std::int64_t>(cfg.collocation_max_n));
  if (max_n < 2 || max_n > static_cast<std::int64_t>(kMaxOrder)) throw Error("stats.max_n must lie in [2, 5]");
  cfg.collocation_max_n = static_cast<std::size_t>(max_n);
  if (auto scope = kv.get("pipeline.stats_scope")) {
    auto parsed = parse_stats_scope(*scope);
    if (!parsed) throw Error("pipeline.stats_scope must be candidates or all");
    cfg.stats_scope = *parsed;
  }
  const auto top_k = kv.get_int("report.top_k", static_cast<std::int64_t>(cfg.top_k));
  if (top_k < 1) throw Error("report.top_k must be >= 1");
  cfg.top_k = static_cast<std::size_t>(top_k);
  cfg.serve_host = kv.get_string("serve.host", cfg.serve_host);
  const auto port = kv.get_int("serve.port", cfg.serve_port);
  if (port < 0 || port > 65535) throw Error("serve.port must lie in [0, 65535]");
  cfg.serve_port = static_cast<int>(port);
  return cfg;
}

PipelineConfig PipelineConfig::load(const std::filesystem::path& path) {
  return from_settings(KeyValueConfig::load(path), path.parent_path());
}

void PipelineConfig::validate() const {
  if (corpus.empty()) throw Error("config: corpus path is required");
  auto must_exist = [](const std::filesystem::path& p, const char* what) {
    if (!p.empty() && !std::filesystem::exists(p)) {
      throw Error(std::string("config: ") + what + " not found: " + p.string());
    }
  };
  must_exist(corpus, "corpus");
  must_exist(lexicon, "lexicon");
  must_exist(tagset, "tagset");
  must_exist(vector_verbs, "vector_verbs");
  must_exist(verbalizers, "verbalizers");
  must_exist(named_entities, "named_entities");
  must_exist(rules, "rules");
  must_exist(cp_rules, "cp_rules");
  if (!(filters.ne_penalty > 0.0)) throw Error("config: filters.ne_penalty must be positive");
  if (!(filters.hyphen_boost > 0.0)) throw Error("config: filters.hyphen_boost must be positive");
  if (!(redup.min_suffix_frac >= 0.0 && redup.min_suffix_frac <= 1.0)) {
    throw Error("config: redup.min_suffix_frac must lie in [0, 1]");
  }
  if (top_k < 1) throw Error("config: report.top_k must be >= 1");
}

PipelineResources PipelineResources::load(const PipelineConfig& cfg) {
  PipelineResources r;
  r.tagset = TagsetMap::load(cfg.tagset);
  if (!cfg.lexicon.empty()) r.lexicon = Lexicon::load(cfg.lexicon);
  r.verbs.vector_verbs = load_word_list(cfg.vector_verbs);
  r.verbs.verbalizers = load_word_list(cfg.verbalizers);
  r.entities = NamedEntityList::load(cfg.named_entities);
  r.rules = cfg.rules.empty() ? builtin_rules(cfg.rule_options) : load_rules(cfg.rules);
  if (cfg.complex_predicate) r.cp_rules = cfg.cp_rules.empty() ? CpRuleSet::defaults() : CpRuleSet::load(cfg.cp_rules);
  return r;
}

// ---------------------------------------------------------------------------
// Stages

CandidateSet stage_reduplication(CandidateSet in, const TaggedCorpus& corpus, const Lexicon& lex,
                                 const RedupConfig& cfg) {
  for (auto& c : in) {
    if (c.category == Category::Redup) c.provenance.insert("REDUP:FULL");
  }
  std::set<std::pair<Gram, Category>> present;
  for (const auto& c : in) present.emplace(c.grams, c.category);
  for (auto& c : detect_partial_reduplication(corpus, lex, cfg)) {
    if (present.emplace(c.grams, c.category).second) {
      c.provenance.insert(c.category == Category::PartialRedupMeaningful ? "REDUP:PARTIAL_MEANINGFUL"
                                                                         : "REDUP:PARTIAL_NONMEANINGFUL");
      in.push_back(std::move(c));
    }
  }
  sort_candidates(in);
  return in;
}

CandidateSet stage_verb_gate(CandidateSet in, const VerbLists& lists, const Lexicon& lex,
                             const CpRuleSet* cp_rules) {
  CandidateSet out;
  out.reserve(in.size());
  for (auto& c : in) {
    if (c.category != Category::CompoundVerb && c.category != Category::ConjunctVerb) {
      out.push_back(std::move(c));
      continue;
    }
    if (!verb_gate(c, lists, lex, nullptr)) {
      if (!verb_gate(c, lists, lex, cp_rules)) continue;
      const auto decision = is_conjunct(lex, c.grams[0], c.grams[1], *cp_rules);
      c.provenance.insert("COMPLEX_PREDICATE:" + decision.matched->first + "/" + decision.matched->second);
    } else {
      c.provenance.insert("VERB_LIST");
    }
    out.push_back(std::move(c));
  }
  return out;
}

CandidateSet stage_named_entity(CandidateSet in, const NamedEntityList& nel, const FilterConfig& cfg) {
  if (cfg.ne_drop) {
    std::erase_if(in, [&](const Candidate& c) { return ne_matches(c, nel); });
    return in;
  }
  for (auto& c : in) c = ne_weight(std::move(c), nel, cfg);
  return in;
}

CandidateSet stage_hyphenation(CandidateSet in, const FilterConfig& cfg) {
  for (auto& c : in) c = hyphen_weight(std::move(c), cfg);
  return in;
}

CandidateSet stage_semantic(CandidateSet in, const Lexicon& lex) {
  for (auto& c : in) c = semantic_tag(std::move(c), lex);
  return in;
}

CandidateSet stage_collocations(CandidateSet in, const TaggedCorpus& corpus, const NGramIndex& index,
                                std::size_t max_n, std::uint64_t min_count) {
  std::set<Gram> present;
  for (const auto& c : in) present.insert(c.grams);
  for (std::size_t n = 2; n <= std::min(max_n, index.max_order()); ++n) {
    for (auto& c : all_ngrams_as_collocation_candidates(corpus, index, n, min_count)) {
      if (present.insert(c.grams).second) in.push_back(std::move(c));
    }
  }
  sort_candidates(in);
  return in;
}

RankedList score_candidates(const CandidateSet& candidates, const NGramIndex& index, const StatsConfig& cfg) {
  std::vector<RankedEntry> entries;
  entries.reserve(candidates.size());
  for (const auto& c : candidates) {
    RankedEntry e;
    e.candidate = c;
    if (!c.grams.empty() && c.grams.size() <= index.max_order()) e.count = index.count(c.grams);
    if (c.grams.size() < 2) {
      e.unscored_reason = "single-token candidate";
    } else {
      e.scores = raw_scores(index, c.grams, cfg, &e.unscored_reason);
    }
    entries.push_back(std::move(e));
  }
  return combine_and_rank(std::move(entries));
}

// ---------------------------------------------------------------------------
// Orchestration

PipelineResult run_pipeline(const PipelineConfig& cfg, const RunOptions& options) {
  cfg.validate();
  auto resources = run_stage("resources", [&] { return PipelineResources::load(cfg); });
  return run_pipeline(cfg, resources, options);
}

PipelineResult run_pipeline(const PipelineConfig& cfg, const PipelineResources& res,
                            const RunOptions& options) {
  PipelineResult result;
  const StatsScope scope = options.stats_scope.value_or(cfg.stats_scope);
  const bool dump = options.dump_stages && !cfg.dump_dir.empty();
  if (dump) std::filesystem::create_directories(cfg.dump_dir);

  result.corpus = run_stage("ingest", [&] { return parse_corpus(cfg.corpus, res.tagset, cfg.language); });
  result.index = run_stage("index", [&] { return NGramIndex::build(result.corpus, kMaxOrder); });

  CandidateSet current;
  auto record = [&](std::string name, StageKind kind, std::size_t before) {
    result.stages.push_back({name, kind, before, current.size()});
    if (dump) {
      std::ostringstream file;
      file << std::setw(2) << std::setfill('0') << result.stages.size() << '_' << name << ".tsv";
      write_file(cfg.dump_dir / file.str(), format_candidates_tsv(current));
    }
  };

  current = run_stage("regex", [&] { return generate_candidates(result.corpus, res.rules); });
  record("regex", StageKind::Source, 0);

  std::size_t before = current.size();
  current = run_stage("reduplication", [&] {
    return stage_reduplication(std::move(current), result.corpus, res.lexicon, cfg.redup);
  });
  record("reduplication", StageKind::Add, before);

  before = current.size();
  current = run_stage("verb_gate", [&] {
    return stage_verb_gate(std::move(current), res.verbs, res.lexicon, res.cp_rules ? &*res.cp_rules : nullptr);
  });
  record("verb_gate", StageKind::Drop, before);

  before = current.size();
  current = run_stage("named_entity", [&] { return stage_named_entity(std::move(current), res.entities, cfg.filters); });
  record("named_entity", cfg.filters.ne_drop ? StageKind::Drop : StageKind::Weight, before);

  before = current.size();
  current = run_stage("hyphenation", [&] { return stage_hyphenation(std::move(current), cfg.filters); });
  record("hyphenation", StageKind::Weight, before);

  before = current.size();
  current = run_stage("semantic", [&] { return stage_semantic(std::move(current), res.lexicon); });
  record("semantic", StageKind::Tag, before);

  if (scope == StatsScope::All) {
    before = current.size();
    current = run_stage("collocations", [&] {
      return stage_collocations(std::move(current), result.corpus, result.index, cfg.collocation_max_n,
                                cfg.stats.min_count);
    });
    record("collocations", StageKind::Add, before);
  }

  result.ranked = run_stage("statistics", [&] { return score_candidates(current, result.index, cfg.stats); });
  if (dump) write_file(cfg.dump_dir / "ranked.tsv", format_ranked_tsv(result.ranked));
  return result;
}

// ---------------------------------------------------------------------------
// TSV formats

std::string format_ranked_tsv(const RankedList& ranked) {
  std::string out;
  std::size_t rank = 0;
  auto emit = [&](const RankedEntry& e, bool fused) {
    out += std::to_string(++rank);
    out += '\t';
    out += fused ? format_double(e.scores.combined) : std::string("NA");
    out += '\t';
    out += optional_number(e.scores.npmi);
    out += '\t';
    out += optional_number(e.scores.bllr);
    out += '\t';
    out += optional_number(e.scores.dice);
    out += '\t';
    out += std::to_string(e.count);
    out += '\t';
    out += to_string(e.candidate.category);
    out += '\t';
    out += join(e.candidate.grams, " ");
    out += '\n';
  };
  for (const auto& e : ranked.ranked) emit(e, true);
  for (const auto& e : ranked.unscored) emit(e, false);
  return out;
}

std::string format_candidates_tsv(const CandidateSet& candidates) {
  std::string out;
  for (const auto& c : candidates) {
    out += to_string(c.category);
    out += '\t';
    out += join(c.grams, " ");
    out += '\t';
    out += std::to_string(c.occurrences);
    out += '\t';
    out += format_double(c.weight);
    out += '\t';
    out += join(c.provenance, ",");
    out += '\n';
  }
  return out;
}

std::vector<RankedRow> parse_ranked_tsv(std::string_view text, std::string_view source_name) {
  const std::string source(source_name);
  std::vector<RankedRow> rows;
  auto number = [&](std::string_view field, std::size_t line_no) -> std::optional<double> {
    if (field == "NA") return std::nullopt;
    auto v = parse_double(field);
    if (!v) throw ParseError(source, line_no, "bad number '" + std::string(field) + "'");
    return v;
  };
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (line.empty() || line.front() == '#') return;
    const auto f = split(line, '\t');
    if (f.size() != 8) throw ParseError(source, line_no, "expected 8 tab-separated columns");
    RankedRow row;
    auto rank = parse_int<std::size_t>(f[0]);
    auto count = parse_int<std::uint64_t>(f[5]);
    auto category = parse_category(f[6]);
    if (!rank || !count || !category) throw ParseError(source, line_no, "bad rank, count or category");
    row.rank = *rank;
    row.combined = number(f[1], line_no);
    row.npmi = number(f[2], line_no);
    row.bllr = number(f[3], line_no);
    row.dice = number(f[4], line_no);
    row.count = *count;
    row.category = *category;
    for (auto tok : split_whitespace(f[7])) row.grams.emplace_back(tok);
    if (row.grams.empty()) throw ParseError(source, line_no, "empty grams");
    rows.push_back(std::move(row));
  });
  return rows;
}

}  // namespace mwe
