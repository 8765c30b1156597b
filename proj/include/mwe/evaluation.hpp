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

#ifndef MWE_EVALUATION_HPP_
#define MWE_EVALUATION_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mwe/gold_store.hpp"
#include "mwe/pipeline.hpp"

namespace mwe {

/// Judged candidates only: `hits` counts candidates with a gold verdict,
/// `unjudged` those without one.
struct PrecisionCell {
  std::size_t hits = 0;
  std::size_t correct = 0;
  std::size_t unjudged = 0;

  std::optional<double> precision() const {
    if (hits == 0) return std::nullopt;
    return static_cast<double>(correct) / static_cast<double>(hits);
  }
};

enum class Measure { Combined, Npmi, Bllr, Dice };

std::string_view to_string(Measure measure);

struct EvalReport {
  std::size_t k = 0;
  std::map<Category, PrecisionCell> per_filter;
  /// Verb candidates grouped by their final (light) verb.
  std::map<std::pair<Category, std::string>, PrecisionCell> per_verb;
  /// Top-k by each measure, separately for each n-gram order.
  std::map<std::pair<Measure, std::size_t>, PrecisionCell> at_k;
};

/// Verdict for a ranked row: the entry for (grams, category) when present,
/// otherwise the shared verdict of every entry for the same grams.
std::optional<Verdict> gold_verdict(const GoldStore& gold, const Gram& grams, Category category);

/// Throws Error when k == 0.
EvalReport evaluate(const std::vector<RankedRow>& rows, const GoldStore& gold, std::size_t k);

nlohmann::json to_json(const EvalReport& report);
std::string format_report(const EvalReport& report);

}  // namespace mwe

#endif  // MWE_EVALUATION_HPP_
