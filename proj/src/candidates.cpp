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

#include "mwe/candidates.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <utility>

#include "mwe/error.hpp"
#include "mwe/text_io.hpp"
#include "mwe/unicode.hpp"

namespace mwe {

namespace {

constexpr std::array<std::pair<Category, std::string_view>, 10> kCategoryNames{{
    {Category::Redup, "REDUP"},
    {Category::PartialRedupMeaningful, "PARTIAL_REDUP_MEANINGFUL"},
    {Category::PartialRedupNonmeaningful, "PARTIAL_REDUP_NONMEANINGFUL"},
    {Category::CompoundNoun, "COMPOUND_NOUN"},
    {Category::CompoundVerb, "COMPOUND_VERB"},
    {Category::ConjunctVerb, "CONJUNCT_VERB"},
    {Category::AdjNoun, "ADJ_NOUN"},
    {Category::NounCompoundNgram, "NOUN_COMPOUND_NGRAM"},
    {Category::Hyphenated, "HYPHENATED"},
    {Category::Collocation, "COLLOCATION"},
}};

constexpr std::array<std::pair<SlotPredicate, std::string_view>, 7> kSlotNames{{
    {SlotPredicate::Noun, "NOUN"},
    {SlotPredicate::Verb, "VERB"},
    {SlotPredicate::Adj, "ADJ"},
    {SlotPredicate::Adv, "ADV"},
    {SlotPredicate::Any, "ANY"},
    {SlotPredicate::Same, "SAME"},
    {SlotPredicate::Hyphen, "HYPHEN"},
}};

void validate(const PatternRule& rule, const std::string& source, std::size_t line) {
  const auto& s = rule.slots;
  const bool hyphen_rule = s.size() == 1 && s[0] == SlotPredicate::Hyphen;
  if (!hyphen_rule && (s.size() < 2 || s.size() > kMaxOrder)) {
    throw ParseError(source, line, "rule '" + rule.name + "' must have 2 to 5 slots");
  }
  if (!s.empty() && s.front() == SlotPredicate::Same) {
    throw ParseError(source, line, "rule '" + rule.name + "' starts with SAME");
  }
  if (!hyphen_rule && std::find(s.begin(), s.end(), SlotPredicate::Hyphen) != s.end()) {
    throw ParseError(source, line, "HYPHEN is only valid as a one-slot rule");
  }
}

bool slot_matches(SlotPredicate slot, const Token& token, const std::string& folded,
                  const std::string* previous_folded) {
  switch (slot) {
    case SlotPredicate::Noun: return token.coarse_tag == CoarseTag::Noun;
    case SlotPredicate::Verb: return token.coarse_tag == CoarseTag::Verb;
    case SlotPredicate::Adj: return token.coarse_tag == CoarseTag::Adj;
    case SlotPredicate::Adv: return token.coarse_tag == CoarseTag::Adv;
    case SlotPredicate::Any: return true;
    case SlotPredicate::Same: return previous_folded && *previous_folded == folded;
    case SlotPredicate::Hyphen: return token.has_internal_hyphen;
  }
  return false;
}

class Aggregator {
 public:
  void add(const Sentence& sentence, std::size_t start, std::size_t n, Category category,
           std::string_view rule_name) {
    Gram grams;
    grams.reserve(n);
    for (std::size_t i = 0; i < n; ++i) grams.push_back(sentence[start + i].surface);
    auto [it, inserted] = slots_.try_emplace({grams, category}, out_.size());
    if (inserted) {
      Candidate c;
      c.grams = std::move(grams);
      for (std::size_t i = 0; i < n; ++i) c.tags.push_back(sentence[start + i].coarse_tag);
      c.category = category;
      c.first_occurrence = {sentence[start].sentence_index, sentence[start].position};
      out_.push_back(std::move(c));
    }
    Candidate& c = out_[it->second];
    ++c.occurrences;
    c.provenance.insert("RULE:" + std::string(rule_name));
  }

  CandidateSet take() {
    sort_candidates(out_);
    return std::move(out_);
  }

 private:
  std::map<std::pair<Gram, Category>, std::size_t> slots_;
  CandidateSet out_;
};

}  // namespace

std::string_view to_string(Category category) {
  for (const auto& [c, name] : kCategoryNames) {
    if (c == category) return name;
  }
  return "COLLOCATION";
}

std::optional<Category> parse_category(std::string_view name) {
  for (const auto& [c, n] : kCategoryNames) {
    if (n == name) return c;
  }
  return std::nullopt;
}

std::string_view to_string(SlotPredicate slot) {
  for (const auto& [s, name] : kSlotNames) {
    if (s == slot) return name;
  }
  return "ANY";
}

std::optional<SlotPredicate> parse_slot(std::string_view name) {
  for (const auto& [s, n] : kSlotNames) {
    if (n == name) return s;
  }
  return std::nullopt;
}

void sort_candidates(CandidateSet& set) {
  std::sort(set.begin(), set.end(), [](const Candidate& a, const Candidate& b) {
    if (a.first_occurrence != b.first_occurrence) return a.first_occurrence < b.first_occurrence;
    if (a.category != b.category) return a.category < b.category;
    return a.grams < b.grams;
  });
}

std::vector<PatternRule> builtin_rules(const RuleOptions& options) {
  using S = SlotPredicate;
  std::vector<PatternRule> rules{
      {"R1_REDUP", {S::Any, S::Same}, Category::Redup},
      {"R2_COMPOUND_NOUN", {S::Noun, S::Noun}, Category::CompoundNoun},
      {"R3_COMPOUND_VERB", {S::Verb, S::Verb}, Category::CompoundVerb},
      {"R4_CONJUNCT_VERB", {S::Noun, S::Verb}, Category::ConjunctVerb},
  };
  for (std::size_t n = 3; n <= kMaxOrder; ++n) {
    rules.push_back({"R5_NOUN_COMPOUND_" + std::to_string(n), std::vector<S>(n, S::Noun),
                     Category::NounCompoundNgram});
  }
  for (std::size_t n = options.adj_noun_bigrams ? 2 : 3; n <= kMaxOrder; ++n) {
    std::vector<S> slots(n, S::Noun);
    slots.front() = S::Adj;
    rules.push_back({"R6_ADJ_NOUN_" + std::to_string(n), std::move(slots), Category::AdjNoun});
  }
  rules.push_back({"R7_HYPHENATED", {S::Hyphen}, Category::Hyphenated});
  return rules;
}

std::vector<PatternRule> parse_rules(std::string_view text, std::string_view source_name) {
  const std::string source(source_name);
  std::vector<PatternRule> rules;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (trim(line).empty() || line.front() == '#') return;
    const auto fields = split(line, '\t');
    if (fields.size() != 3) throw ParseError(source, line_no, "expected name<TAB>category<TAB>pattern");
    PatternRule rule;
    rule.name = std::string(trim(fields[0]));
    const auto category = parse_category(trim(fields[1]));
    if (!category) throw ParseError(source, line_no, "unknown category '" + std::string(fields[1]) + "'");
    rule.category = *category;
    for (auto tok : split_whitespace(fields[2])) {
      const auto slot = parse_slot(tok);
      if (!slot) throw ParseError(source, line_no, "unknown pattern token '" + std::string(tok) + "'");
      rule.slots.push_back(*slot);
    }
    validate(rule, source, line_no);
    rules.push_back(std::move(rule));
  });
  return rules;
}

std::vector<PatternRule> load_rules(const std::filesystem::path& path) {
  return parse_rules(read_file(path), path.string());
}

CandidateSet generate_candidates(const TaggedCorpus& corpus, const std::vector<PatternRule>& rules) {
  if (rules.empty()) throw Error("generate_candidates needs at least one rule");
  for (const auto& rule : rules) validate(rule, "<rules>", 0);

  const bool needs_fold = std::any_of(rules.begin(), rules.end(), [](const PatternRule& r) {
    return std::find(r.slots.begin(), r.slots.end(), SlotPredicate::Same) != r.slots.end();
  });

  Aggregator agg;
  std::vector<std::string> folded;
  for (const auto& sentence : corpus.sentences) {
    folded.clear();
    if (needs_fold) {
      for (const auto& token : sentence) folded.push_back(text::fold_case(token.surface));
    } else {
      folded.resize(sentence.size());
    }
    for (std::size_t start = 0; start < sentence.size(); ++start) {
      for (const auto& rule : rules) {
        const std::size_t n = rule.arity();
        if (start + n > sentence.size()) continue;
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) {
          const std::string* prev = i ? &folded[start + i - 1] : nullptr;
          ok = slot_matches(rule.slots[i], sentence[start + i], folded[start + i], prev);
        }
        if (ok) agg.add(sentence, start, n, rule.category, rule.name);
      }
    }
  }
  return agg.take();
}

CandidateSet all_ngrams_as_collocation_candidates(const TaggedCorpus& corpus,
                                                  const NGramIndex& index, std::size_t n,
                                                  std::uint64_t min_count) {
  if (n < 2 || n > index.max_order()) throw Error("collocation order outside the index range");
  Aggregator agg;
  Gram window(n);
  for (const auto& sentence : corpus.sentences) {
    for (std::size_t start = 0; start + n <= sentence.size(); ++start) {
      for (std::size_t i = 0; i < n; ++i) window[i] = sentence[start + i].surface;
      if (index.count(window) >= min_count) {
        agg.add(sentence, start, n, Category::Collocation, "NGRAM");
      }
    }
  }
  return agg.take();
}

}  // namespace mwe
