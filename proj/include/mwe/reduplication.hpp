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

#ifndef MWE_REDUPLICATION_HPP_
#define MWE_REDUPLICATION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "mwe/candidates.hpp"
#include "mwe/corpus.hpp"
#include "mwe/lexicon.hpp"

namespace mwe {

struct RedupConfig {
  double min_suffix_frac = 0.5;     // shared suffix >= ceil(frac * len(shorter))
  std::size_t max_prefix_delta = 2;  // echo words differ only in this many leading scalars
};

enum class RedupKind { Full, PartialMeaningful, PartialNonmeaningful, None };

std::string_view to_string(RedupKind kind);

struct RedupEvidence {
  std::size_t shared_suffix_len = 0;
  std::optional<std::string> lemma1;
  std::optional<std::string> lemma2;
  std::size_t prefix_delta_len = 0;
};

struct ReduplicationVerdict {
  RedupKind kind = RedupKind::None;
  RedupEvidence evidence;
};

/// A word is meaningful when the lexicon stores it or has base forms for it
/// (see Lexicon::base_forms).
bool is_meaningful(const Lexicon& lex, std::string_view word);

/// Full, meaningful-partial (rhyming real words) or non-meaningful-partial
/// (echo word) reduplication. Purely lexical: no corpus counts are consulted.
ReduplicationVerdict classify_reduplication(const Lexicon& lex, std::string_view w1,
                                            std::string_view w2, const RedupConfig& cfg = {});

/// Classifies every adjacent pair of distinct surfaces in the corpus and
/// returns the partial reduplications as PARTIAL_REDUP_* candidates.
CandidateSet detect_partial_reduplication(const TaggedCorpus& corpus, const Lexicon& lex,
                                          const RedupConfig& cfg = {});

}  // namespace mwe

#endif  // MWE_REDUPLICATION_HPP_
