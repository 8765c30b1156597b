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

#ifndef MWE_ASSOCIATION_HPP_
#define MWE_ASSOCIATION_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mwe/candidates.hpp"
#include "mwe/ngram_index.hpp"

// Association measures for 2- to 5-grams. For a gram g = w1..wn, "prefix" is
// w1..w(n-1) and "suffix" is w2..wn; for a bigram those are the two words.
// All probabilities are count / N.
namespace mwe {

/// Frequency-weighted PMI: log2( p(g)^2 / (p(prefix) * p(suffix)) ).
/// Throws UndefinedScore when g, prefix or suffix is unobserved.
double npmi(const NGramIndex& index, std::span<const std::string> gram);

struct BinomialCell {
  std::uint64_t k = 0;  // successes
  std::uint64_t n = 0;  // trials

  bool operator==(const BinomialCell&) const = default;
};

/// k*log2(p) + (n-k)*log2(1-p), with 0*log2(0) = 0.
double binomial_log_likelihood(std::uint64_t k, std::uint64_t n, double p);

/// log2( L(H_same) / L(H_diff) ) for two binomial cells: the pooled
/// estimate against the per-cell estimates. Always <= 0.
double log_likelihood_ratio(BinomialCell with_context, BinomialCell without_context);

struct LlrDirection {
  BinomialCell with_context;     // k1 = c(g), n1 = c(context)
  BinomialCell without_context;  // k2 = c(end word) - c(g), n2 = N - c(context)
  double log_ratio = 0.0;
};

struct BllrResult {
  LlrDirection forward;   // p(wn | prefix) vs p(wn | not prefix)
  LlrDirection backward;  // p(w1 | suffix) vs p(w1 | not suffix)
  double score = 0.0;     // mean of the two log ratios; <= 0, lower is stronger
};

/// Bi-directional log-likelihood ratio. Throws UndefinedScore when a cell has
/// no trials or more successes than trials.
BllrResult bllr_detail(const NGramIndex& index, std::span<const std::string> gram);

inline double bllr(const NGramIndex& index, std::span<const std::string> gram) {
  return bllr_detail(index, gram).score;
}

/// c(g) / (c(prefix) + c(suffix)), doubled on request. Throws UndefinedScore
/// when the denominator is zero; an unobserved gram scores 0.
double dice(const NGramIndex& index, std::span<const std::string> gram, bool doubled = false);

struct StatsConfig {
  bool dice_doubled = false;
  std::uint64_t min_count = 2;
};

struct ScoreVector {
  std::optional<double> npmi;
  std::optional<double> bllr;
  std::optional<double> dice;
  double norm_npmi = 0.0;
  double norm_bllr = 0.0;
  double norm_dice = 0.0;
  double combined = 0.0;

  bool complete() const { return npmi && bllr && dice; }
};

/// Raw measures for one gram; an undefined measure is left empty and its
/// reason appended to `why` when given.
ScoreVector raw_scores(const NGramIndex& index, std::span<const std::string> gram,
                       const StatsConfig& cfg, std::string* why = nullptr);

struct RankedEntry {
  Candidate candidate;
  std::uint64_t count = 0;
  ScoreVector scores;
  std::string unscored_reason;  // set for entries excluded from fusion
};

struct RankedList {
  std::vector<RankedEntry> ranked;    // fused, best first
  std::vector<RankedEntry> unscored;  // missing a measure; weight, count, grams order
};

/// Per measure, maps raw scores onto [0, 1] with the best candidate at
/// exactly 1.0: NPMI affinely (x - min) / (max - min); BLLR negated and
/// divided by its maximum; Dice divided by its maximum. A measure with no
/// spread maps every candidate to 1.0. combined = sum * weight, sorted
/// descending with ties broken by count (descending), grams, category.
RankedList combine_and_rank(std::vector<RankedEntry> entries);

}  // namespace mwe

#endif  // MWE_ASSOCIATION_HPP_
