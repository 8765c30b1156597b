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

#ifndef MWE_CANDIDATES_HPP_
#define MWE_CANDIDATES_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mwe/corpus.hpp"
#include "mwe/ngram_index.hpp"

namespace mwe {

enum class Category : std::uint8_t {
  Redup,
  PartialRedupMeaningful,
  PartialRedupNonmeaningful,
  CompoundNoun,
  CompoundVerb,
  ConjunctVerb,
  AdjNoun,
  NounCompoundNgram,
  Hyphenated,
  Collocation,
};

std::string_view to_string(Category category);
std::optional<Category> parse_category(std::string_view name);

struct Occurrence {
  std::size_t sentence = 0;
  std::size_t position = 0;

  auto operator<=>(const Occurrence&) const = default;
};

struct Candidate {
  Gram grams;
  std::vector<CoarseTag> tags;  // parallel to grams, from the first occurrence
  Category category = Category::Collocation;
  Occurrence first_occurrence;
  std::size_t occurrences = 0;  // matched windows aggregated into this candidate
  double weight = 1.0;
  std::set<std::string> provenance;
};

/// Candidates sorted by first occurrence, then category, then grams.
using CandidateSet = std::vector<Candidate>;

void sort_candidates(CandidateSet& set);

enum class SlotPredicate : std::uint8_t { Noun, Verb, Adj, Adv, Any, Same, Hyphen };

std::string_view to_string(SlotPredicate slot);
std::optional<SlotPredicate> parse_slot(std::string_view name);

/// A contiguous POS pattern. SAME requires the surface to equal the previous
/// slot's surface (case-folded); HYPHEN matches a token with an internal
/// hyphen and is only used by the single-token hyphenation rule.
struct PatternRule {
  std::string name;
  std::vector<SlotPredicate> slots;
  Category category = Category::Collocation;

  std::size_t arity() const { return slots.size(); }
};

struct RuleOptions {
  bool adj_noun_bigrams = true;
};

/// R1 reduplication, R2 compound noun, R3 compound verb, R4 conjunct verb,
/// R5 noun compounds of length 3-5, R6 adjective + 1-4 nouns, R7 hyphenated.
std::vector<PatternRule> builtin_rules(const RuleOptions& options = {});

/// "name<TAB>category<TAB>pattern" lines; pattern tokens are NOUN, VERB,
/// ADJ, ADV, ANY, SAME (and HYPHEN for a one-slot rule).
std::vector<PatternRule> load_rules(const std::filesystem::path& path);
std::vector<PatternRule> parse_rules(std::string_view text, std::string_view source_name = "<rules>");

/// Scans every within-sentence window against every rule and aggregates
/// matches by (grams, category). Throws Error when `rules` is empty.
CandidateSet generate_candidates(const TaggedCorpus& corpus, const std::vector<PatternRule>& rules);

/// Every n-gram with count >= min_count as a COLLOCATION candidate. Tags and
/// first occurrence come from the first matching window of `corpus`.
CandidateSet all_ngrams_as_collocation_candidates(const TaggedCorpus& corpus,
                                                  const NGramIndex& index, std::size_t n,
                                                  std::uint64_t min_count);

}  // namespace mwe

#endif  // MWE_CANDIDATES_HPP_
