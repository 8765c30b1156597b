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

#include "mwe/linguistic_filters.hpp"

#include <algorithm>

#include "mwe/text_io.hpp"
#include "mwe/unicode.hpp"

namespace mwe {

namespace {

bool listed(const std::set<std::string>& list, const Lexicon& lex, const std::string& word) {
  if (list.empty()) return false;
  if (list.count(word)) return true;
  for (const auto& lemma : lex.base_forms(word)) {
    if (list.count(lemma)) return true;
  }
  return false;
}

}  // namespace

std::set<std::string> load_word_list(const std::filesystem::path& path) {
  std::set<std::string> out;
  if (path.empty()) return out;
  const std::string source = path.string();
  for_each_line(read_file(path), [&](std::size_t line_no, std::string_view line) {
    line = trim(line);
    if (line.empty() || line.front() == '#') return;
    if (auto bad = text::find_invalid_utf8(line)) {
      throw ParseError(source, line_no, "invalid UTF-8 at byte " + std::to_string(*bad));
    }
    out.insert(text::nfc(line));
  });
  return out;
}

NamedEntityList NamedEntityList::parse(std::string_view text) {
  NamedEntityList nel;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    line = trim(line);
    if (line.empty() || line.front() == '#') return;
    if (auto bad = text::find_invalid_utf8(line)) {
      throw ParseError("<named-entities>", line_no, "invalid UTF-8 at byte " + std::to_string(*bad));
    }
    const std::string normalized = text::nfc(line);
    Gram entity;
    for (auto tok : split_whitespace(normalized)) entity.emplace_back(tok);
    nel.entities.push_back(std::move(entity));
  });
  return nel;
}

NamedEntityList NamedEntityList::load(const std::filesystem::path& path) {
  if (path.empty()) return {};
  return parse(read_file(path));
}

bool verb_gate(const Candidate& c, const VerbLists& lists, const Lexicon& lex,
               const CpRuleSet* cp_rules) {
  if (c.grams.empty()) return true;
  const std::string& last = c.grams.back();
  switch (c.category) {
    case Category::CompoundVerb:
      return listed(lists.vector_verbs, lex, last);
    case Category::ConjunctVerb:
      if (listed(lists.verbalizers, lex, last)) return true;
      return cp_rules && c.grams.size() == 2 && is_conjunct(lex, c.grams[0], last, *cp_rules).accepted;
    default:
      return true;
  }
}

bool ne_matches(const Candidate& c, const NamedEntityList& nel) {
  for (const auto& entity : nel.entities) {
    if (entity.empty()) continue;
    if (entity.size() <= c.grams.size() &&
        std::search(c.grams.begin(), c.grams.end(), entity.begin(), entity.end()) != c.grams.end()) {
      return true;
    }
    if (entity.size() > 1) {
      for (const auto& g : c.grams) {
        if (std::find(entity.begin(), entity.end(), g) != entity.end()) return true;
      }
    }
  }
  return false;
}

Candidate ne_weight(Candidate c, const NamedEntityList& nel, const FilterConfig& cfg) {
  if (ne_matches(c, nel)) {
    c.weight *= cfg.ne_penalty;
    c.provenance.insert("NE");
  }
  return c;
}

Candidate hyphen_weight(Candidate c, const FilterConfig& cfg) {
  if (c.category == Category::Hyphenated) {
    c.weight *= cfg.hyphen_boost;
    c.provenance.insert("HYPHEN");
  }
  return c;
}

}  // namespace mwe
