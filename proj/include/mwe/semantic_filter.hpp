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

#ifndef MWE_SEMANTIC_FILTER_HPP_
#define MWE_SEMANTIC_FILTER_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "mwe/candidates.hpp"
#include "mwe/lexicon.hpp"

namespace mwe {

enum class Relation { Synonym, Antonym, Sister, None };

std::string_view to_string(Relation relation);

struct SemanticVerdict {
  Relation relation = Relation::None;
  std::optional<std::pair<std::string, std::string>> via_lemmas;
};

/// Surfaces first, then every pair of base forms. Among the pairs the
/// highest-priority relation wins: SYNONYM > ANTONYM > SISTER.
SemanticVerdict semantic_relation(const Lexicon& lex, std::string_view w1, std::string_view w2);

/// Adds "SEMANTIC:<relation>" provenance to a bigram candidate when its
/// constituents are related; never drops anything.
Candidate semantic_tag(Candidate c, const Lexicon& lex);

}  // namespace mwe

#endif  // MWE_SEMANTIC_FILTER_HPP_
