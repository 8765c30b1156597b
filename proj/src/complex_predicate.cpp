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

#include "mwe/complex_predicate.hpp"

#include <algorithm>

#include "mwe/error.hpp"
#include "mwe/text_io.hpp"

namespace mwe {

CpRuleSet::CpRuleSet(std::vector<CpDecisionRule> rules) {
  for (auto& r : rules) add(std::move(r));
}

CpRuleSet CpRuleSet::defaults() {
  return CpRuleSet({{"VOA", "ABSTRACT_NOUN", true}, {"VOO", "ABSTRACT_NOUN", true}});
}

void CpRuleSet::add(CpDecisionRule rule) {
  for (const auto& r : rules_) {
    if (r.verb_category == rule.verb_category && r.noun_category == rule.noun_category) {
      throw Error("duplicate complex-predicate rule " + rule.verb_category + "/" + rule.noun_category);
    }
  }
  rules_.push_back(std::move(rule));
}

CpRuleSet CpRuleSet::parse(std::string_view text, std::string_view source_name) {
  const std::string source(source_name);
  CpRuleSet set;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (trim(line).empty() || line.front() == '#') return;
    const auto fields = split(line, '\t');
    if (fields.size() != 3) throw ParseError(source, line_no, "expected VERB_CAT<TAB>NOUN_CAT<TAB>accept|reject");
    const auto decision = trim(fields[2]);
    if (decision != "accept" && decision != "reject") {
      throw ParseError(source, line_no, "decision must be accept or reject");
    }
    try {
      set.add({std::string(trim(fields[0])), std::string(trim(fields[1])), decision == "accept"});
    } catch (const Error& e) {
      throw ParseError(source, line_no, e.what());
    }
  });
  return set;
}

CpRuleSet CpRuleSet::load(const std::filesystem::path& path) {
  return parse(read_file(path), path.string());
}

bool CpRuleSet::accepts(std::string_view verb_category, std::string_view noun_category) const {
  return std::any_of(rules_.begin(), rules_.end(), [&](const CpDecisionRule& r) {
    return r.accept && r.verb_category == verb_category && r.noun_category == noun_category;
  });
}

std::set<std::string> categories_with_fallback(const Lexicon& lex, std::string_view word, CoarseTag pos) {
  auto cats = lex.onto_category(word, pos);
  if (!cats.empty()) return cats;
  for (const auto& lemma : lex.base_forms(word)) {
    auto more = lex.onto_category(lemma, pos);
    cats.insert(more.begin(), more.end());
  }
  return cats;
}

ConjunctDecision is_conjunct(const Lexicon& lex, std::string_view noun, std::string_view verb,
                             const CpRuleSet& rules) {
  ConjunctDecision decision;
  if (rules.empty()) return decision;
  const auto verb_cats = categories_with_fallback(lex, verb, CoarseTag::Verb);
  if (verb_cats.empty()) return decision;
  const auto noun_cats = categories_with_fallback(lex, noun, CoarseTag::Noun);
  for (const auto& vc : verb_cats) {
    for (const auto& nc : noun_cats) {
      if (rules.accepts(vc, nc)) {
        decision.accepted = true;
        decision.matched = std::make_pair(vc, nc);
        return decision;
      }
    }
  }
  return decision;
}

}  // namespace mwe
