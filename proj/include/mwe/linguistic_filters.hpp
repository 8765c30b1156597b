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

#ifndef MWE_LINGUISTIC_FILTERS_HPP_
#define MWE_LINGUISTIC_FILTERS_HPP_

#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mwe/candidates.hpp"
#include "mwe/complex_predicate.hpp"
#include "mwe/lexicon.hpp"

namespace mwe {

struct VerbLists {
  std::set<std::string> vector_verbs;
  std::set<std::string> verbalizers;
};

/// One NFC entry per line; blank lines and '#' comments skipped. An empty
/// path gives an empty set.
std::set<std::string> load_word_list(const std::filesystem::path& path);

struct NamedEntityList {
  std::vector<Gram> entities;  // non-empty tuples

  /// One entity per line, tokens space-separated.
  static NamedEntityList load(const std::filesystem::path& path);
  static NamedEntityList parse(std::string_view text);
};

struct FilterConfig {
  double ne_penalty = 0.5;
  double hyphen_boost = 1.5;
  bool ne_drop = false;
};

/// Keep/drop for verb candidates. COMPOUND_VERB survives iff its last gram
/// (or a level-0 lemma of it) is a vector verb; CONJUNCT_VERB iff it is a
/// verbalizer or `cp_rules` (when given) accepts the pair. Other categories
/// always pass.
bool verb_gate(const Candidate& c, const VerbLists& lists, const Lexicon& lex,
               const CpRuleSet* cp_rules);

/// True when some contiguous sub-tuple of c.grams is a listed entity or some
/// gram occurs inside a listed entity.
bool ne_matches(const Candidate& c, const NamedEntityList& nel);

Candidate ne_weight(Candidate c, const NamedEntityList& nel, const FilterConfig& cfg);
Candidate hyphen_weight(Candidate c, const FilterConfig& cfg);

}  // namespace mwe

#endif  // MWE_LINGUISTIC_FILTERS_HPP_
