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

#include "mwe/reduplication.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <utility>
#include <vector>

#include "mwe/unicode.hpp"

namespace mwe {

namespace {

constexpr std::size_t kLemmaSuffixMin = 2;

std::vector<std::string> lemma_set(const Lexicon& lex, const std::string& word) {
  if (lex.contains(word)) return {word};
  return lex.base_forms(word);
}

std::size_t required_suffix(double frac, std::size_t shorter) {
  const double raw = frac * static_cast<double>(shorter);
  return static_cast<std::size_t>(std::max(0.0, std::ceil(raw - 1e-9)));
}

}  // namespace

std::string_view to_string(RedupKind kind) {
  switch (kind) {
    case RedupKind::Full: return "FULL";
    case RedupKind::PartialMeaningful: return "PARTIAL_MEANINGFUL";
    case RedupKind::PartialNonmeaningful: return "PARTIAL_NONMEANINGFUL";
    case RedupKind::None: return "NONE";
  }
  return "NONE";
}

bool is_meaningful(const Lexicon& lex, std::string_view word) {
  return lex.contains(word) || !lex.base_forms(word).empty();
}

ReduplicationVerdict classify_reduplication(const Lexicon& lex, std::string_view w1,
                                            std::string_view w2, const RedupConfig& cfg) {
  ReduplicationVerdict verdict;
  const std::string a = text::nfc(w1);
  const std::string b = text::nfc(w2);
  if (a.empty() || b.empty()) return verdict;

  const std::u32string sa = text::to_scalars(a);
  const std::u32string sb = text::to_scalars(b);
  verdict.evidence.shared_suffix_len = text::common_suffix_length(sa, sb);

  if (a == b || text::fold_case(a) == text::fold_case(b)) {
    verdict.kind = RedupKind::Full;
    return verdict;
  }

  const bool meaningful_a = is_meaningful(lex, a);
  const bool meaningful_b = is_meaningful(lex, b);

  // rhyming pair of real words
  const std::size_t shorter = std::min(sa.size(), sb.size());
  if (meaningful_a && meaningful_b &&
      verdict.evidence.shared_suffix_len >= std::max<std::size_t>(1, required_suffix(cfg.min_suffix_frac, shorter))) {
    if (lex.contains(a) && lex.contains(b)) {
      verdict.kind = RedupKind::PartialMeaningful;
      verdict.evidence.lemma1 = a;
      verdict.evidence.lemma2 = b;
      return verdict;
    }
    const auto lemmas_a = lemma_set(lex, a);
    const auto lemmas_b = lemma_set(lex, b);
    for (const auto& la : lemmas_a) {
      const auto la_s = text::to_scalars(la);
      for (const auto& lb : lemmas_b) {
        if (text::common_suffix_length(la_s, text::to_scalars(lb)) >= kLemmaSuffixMin) {
          verdict.kind = RedupKind::PartialMeaningful;
          verdict.evidence.lemma1 = la;
          verdict.evidence.lemma2 = lb;
          return verdict;
        }
      }
    }
  }

  // echo word: same length, differs only in a short leading prefix
  if (sa.size() == sb.size()) {
    std::size_t last_diff = 0;
    for (std::size_t i = 0; i < sa.size(); ++i) {
      if (sa[i] != sb[i]) last_diff = i + 1;
    }
    verdict.evidence.prefix_delta_len = last_diff;
    if (last_diff >= 1 && last_diff <= cfg.max_prefix_delta && last_diff < sa.size() &&
        meaningful_a && !meaningful_b) {
      verdict.kind = RedupKind::PartialNonmeaningful;
      return verdict;
    }
  }
  return verdict;
}

CandidateSet detect_partial_reduplication(const TaggedCorpus& corpus, const Lexicon& lex,
                                          const RedupConfig& cfg) {
  std::map<std::pair<std::string, std::string>, RedupKind> cache;
  std::map<std::pair<Gram, Category>, std::size_t> slots;
  CandidateSet out;
  for (const auto& sentence : corpus.sentences) {
    for (std::size_t i = 0; i + 1 < sentence.size(); ++i) {
      const Token& t1 = sentence[i];
      const Token& t2 = sentence[i + 1];
      if (t1.surface == t2.surface) continue;
      auto key = std::make_pair(t1.surface, t2.surface);
      auto it = cache.find(key);
      if (it == cache.end()) {
        it = cache.emplace(key, classify_reduplication(lex, t1.surface, t2.surface, cfg).kind).first;
      }
      Category category;
      if (it->second == RedupKind::PartialMeaningful) {
        category = Category::PartialRedupMeaningful;
      } else if (it->second == RedupKind::PartialNonmeaningful) {
        category = Category::PartialRedupNonmeaningful;
      } else {
        continue;
      }
      Gram grams{t1.surface, t2.surface};
      auto [slot, inserted] = slots.try_emplace({grams, category}, out.size());
      if (inserted) {
        Candidate c;
        c.grams = std::move(grams);
        c.tags = {t1.coarse_tag, t2.coarse_tag};
        c.category = category;
        c.first_occurrence = {t1.sentence_index, t1.position};
        c.provenance.insert("PARTIAL_REDUP");
        out.push_back(std::move(c));
      }
      ++out[slot->second].occurrences;
    }
  }
  sort_candidates(out);
  return out;
}

}  // namespace mwe
