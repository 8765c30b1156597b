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

#ifndef MWE_COMPLEX_PREDICATE_HPP_
#define MWE_COMPLEX_PREDICATE_HPP_

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mwe/lexicon.hpp"

namespace mwe {

// Conjunct verbs without a verbalizer list: a light verb whose selectional
// preference is violated by its noun (an action verb taking an abstract noun
// rather than an object) loses its own sense and forms one predicate.

struct CpDecisionRule {
  std::string verb_category;
  std::string noun_category;
  bool accept = true;

  bool operator==(const CpDecisionRule&) const = default;
};

class CpRuleSet {
 public:
  CpRuleSet() = default;
  explicit CpRuleSet(std::vector<CpDecisionRule> rules);

  /// {(VOA, ABSTRACT_NOUN, accept), (VOO, ABSTRACT_NOUN, accept)}
  static CpRuleSet defaults();

  /// "VERB_CAT<TAB>NOUN_CAT<TAB>accept|reject" lines.
  static CpRuleSet load(const std::filesystem::path& path);
  static CpRuleSet parse(std::string_view text, std::string_view source_name = "<cp-rules>");

  /// Throws Error when the (verb, noun) pair already has a rule.
  void add(CpDecisionRule rule);

  bool accepts(std::string_view verb_category, std::string_view noun_category) const;
  const std::vector<CpDecisionRule>& rules() const { return rules_; }
  bool empty() const { return rules_.empty(); }

 private:
  std::vector<CpDecisionRule> rules_;
};

struct ConjunctDecision {
  bool accepted = false;
  std::optional<std::pair<std::string, std::string>> matched;  // (verb cat, noun cat)

  explicit operator bool() const { return accepted; }
};

/// Ontological categories of `word` for `pos`; when the surface has none,
/// the union over its level-0 lemmas.
std::set<std::string> categories_with_fallback(const Lexicon& lex, std::string_view word, CoarseTag pos);

ConjunctDecision is_conjunct(const Lexicon& lex, std::string_view noun, std::string_view verb,
                             const CpRuleSet& rules);

}  // namespace mwe

#endif  // MWE_COMPLEX_PREDICATE_HPP_
