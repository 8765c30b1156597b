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

#include "mwe/semantic_filter.hpp"

#include <array>
#include <vector>

namespace mwe {

namespace {

bool holds(const Lexicon& lex, Relation relation, const std::string& a, const std::string& b) {
  switch (relation) {
    case Relation::Synonym: return lex.are_synonyms(a, b);
    case Relation::Antonym: return lex.are_antonyms(a, b);
    case Relation::Sister: return lex.are_sister_words(a, b);
    case Relation::None: return false;
  }
  return false;
}

constexpr std::array<Relation, 3> kPriority{Relation::Synonym, Relation::Antonym, Relation::Sister};

}  // namespace

std::string_view to_string(Relation relation) {
  switch (relation) {
    case Relation::Synonym: return "SYNONYM";
    case Relation::Antonym: return "ANTONYM";
    case Relation::Sister: return "SISTER";
    case Relation::None: return "NONE";
  }
  return "NONE";
}

SemanticVerdict semantic_relation(const Lexicon& lex, std::string_view w1, std::string_view w2) {
  SemanticVerdict verdict;
  const std::string a(w1);
  const std::string b(w2);
  for (Relation r : kPriority) {
    if (holds(lex, r, a, b)) {
      verdict.relation = r;
      verdict.via_lemmas = std::make_pair(a, b);
      return verdict;
    }
  }
  const auto la = lex.base_forms(a);
  if (la.empty()) return verdict;
  const auto lb = lex.base_forms(b);
  for (Relation r : kPriority) {
    for (const auto& x : la) {
      for (const auto& y : lb) {
        if (holds(lex, r, x, y)) {
          verdict.relation = r;
          verdict.via_lemmas = std::make_pair(x, y);
          return verdict;
        }
      }
    }
  }
  return verdict;
}

Candidate semantic_tag(Candidate c, const Lexicon& lex) {
  if (c.grams.size() != 2 || lex.empty()) return c;
  const auto verdict = semantic_relation(lex, c.grams[0], c.grams[1]);
  if (verdict.relation != Relation::None) {
    c.provenance.insert("SEMANTIC:" + std::string(to_string(verdict.relation)));
  }
  return c;
}

}  // namespace mwe
