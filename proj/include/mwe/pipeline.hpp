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

#ifndef MWE_PIPELINE_HPP_
#define MWE_PIPELINE_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mwe/association.hpp"
#include "mwe/candidates.hpp"
#include "mwe/complex_predicate.hpp"
#include "mwe/config.hpp"
#include "mwe/corpus.hpp"
#include "mwe/lexicon.hpp"
#include "mwe/linguistic_filters.hpp"
#include "mwe/ngram_index.hpp"
#include "mwe/reduplication.hpp"

namespace mwe {

enum class StatsScope { Candidates, All };

std::string_view to_string(StatsScope scope);
std::optional<StatsScope> parse_stats_scope(std::string_view name);

struct PipelineConfig {
  std::filesystem::path corpus;
  std::filesystem::path lexicon;
  std::filesystem::path tagset;
  std::filesystem::path vector_verbs;
  std::filesystem::path verbalizers;
  std::filesystem::path named_entities;
  std::filesystem::path rules;     // custom pattern rules; empty = built-in R1-R7
  std::filesystem::path cp_rules;  // complex-predicate table; empty = defaults
  std::filesystem::path gold;
  std::filesystem::path output;    // ranked TSV
  std::filesystem::path dump_dir;  // stage dumps
  std::string language = "und";

  RuleOptions rule_options;
  RedupConfig redup;
  FilterConfig filters;
  StatsConfig stats;
  bool complex_predicate = true;
  StatsScope stats_scope = StatsScope::Candidates;
  std::size_t collocation_max_n = kMaxOrder;
  std::size_t top_k = 200;
  std::string serve_host = "127.0.0.1";
  int serve_port = 8080;

  /// Relative paths resolve against `base_dir`.
  static PipelineConfig from_settings(const KeyValueConfig& kv, const std::filesystem::path& base_dir);
  static PipelineConfig load(const std::filesystem::path& path);

  /// Throws Error for missing input files or out-of-range settings.
  void validate() const;
};

/// Everything the stages read besides the corpus, loaded once per run.
struct PipelineResources {
  TagsetMap tagset = TagsetMap::builtin();
  Lexicon lexicon;
  VerbLists verbs;
  NamedEntityList entities;
  std::vector<PatternRule> rules;
  std::optional<CpRuleSet> cp_rules;

  static PipelineResources load(const PipelineConfig& cfg);
};

enum class StageKind { Source, Add, Drop, Weight, Tag };

std::string_view to_string(StageKind kind);

struct StageReport {
  std::string name;
  StageKind kind = StageKind::Source;
  std::size_t before = 0;
  std::size_t after = 0;
};

struct PipelineResult {
  TaggedCorpus corpus;
  NGramIndex index;
  RankedList ranked;
  std::vector<StageReport> stages;
};

struct RunOptions {
  bool dump_stages = false;
  std::optional<StatsScope> stats_scope;  // overrides the config
};

// Individual stages, exposed for composition tests.
CandidateSet stage_reduplication(CandidateSet in, const TaggedCorpus& corpus, const Lexicon& lex,
                                 const RedupConfig& cfg);
CandidateSet stage_verb_gate(CandidateSet in, const VerbLists& lists, const Lexicon& lex,
                             const CpRuleSet* cp_rules);
CandidateSet stage_named_entity(CandidateSet in, const NamedEntityList& nel, const FilterConfig& cfg);
CandidateSet stage_hyphenation(CandidateSet in, const FilterConfig& cfg);
CandidateSet stage_semantic(CandidateSet in, const Lexicon& lex);
CandidateSet stage_collocations(CandidateSet in, const TaggedCorpus& corpus, const NGramIndex& index,
                                std::size_t max_n, std::uint64_t min_count);

/// Scores each candidate against the index and fuses the measures.
RankedList score_candidates(const CandidateSet& candidates, const NGramIndex& index, const StatsConfig& cfg);

/// ingest -> index -> patterns -> reduplication -> verb gate (with complex
/// predicates) -> named entities -> hyphenation -> semantic -> statistics.
/// Errors are rethrown as Error("<stage>: <cause>").
PipelineResult run_pipeline(const PipelineConfig& cfg, const RunOptions& options = {});
PipelineResult run_pipeline(const PipelineConfig& cfg, const PipelineResources& resources,
                            const RunOptions& options = {});

/// rank, combined, npmi, bllr, dice, count, category, grams (space-joined).
/// Unscored entries follow the fused ones with "NA" in missing columns.
std::string format_ranked_tsv(const RankedList& ranked);

/// Candidate dump: category, grams, occurrences, weight, provenance.
std::string format_candidates_tsv(const CandidateSet& candidates);

struct RankedRow {
  std::size_t rank = 0;
  std::optional<double> combined;
  std::optional<double> npmi;
  std::optional<double> bllr;
  std::optional<double> dice;
  std::uint64_t count = 0;
  Category category = Category::Collocation;
  Gram grams;
};

std::vector<RankedRow> parse_ranked_tsv(std::string_view text, std::string_view source_name = "<ranked>");

}  // namespace mwe

#endif  // MWE_PIPELINE_HPP_
