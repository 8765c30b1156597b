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

#include "mwe/association.hpp"

#include <algorithm>
#include <cmath>

#include "mwe/error.hpp"
#include "mwe/text_io.hpp"

namespace mwe {

namespace {

void check_gram(std::span<const std::string> gram) {
  if (gram.size() < 2 || gram.size() > kMaxOrder) {
    throw std::out_of_range("association measures need a 2- to 5-gram");
  }
}

std::string describe(std::span<const std::string> gram) { return "'" + join(gram, " ") + "'"; }

LlrDirection direction(std::uint64_t joint, std::uint64_t context, std::uint64_t end_word,
                       std::uint64_t total, std::span<const std::string> gram) {
  if (end_word < joint || total < context) {
    throw UndefinedScore("inconsistent counts for " + describe(gram));
  }
  LlrDirection d;
  d.with_context = {joint, context};
  d.without_context = {end_word - joint, total - context};
  if (d.with_context.n == 0 || d.without_context.n == 0) {
    throw UndefinedScore("empty likelihood cell for " + describe(gram));
  }
  if (d.with_context.k > d.with_context.n || d.without_context.k > d.without_context.n) {
    throw UndefinedScore("likelihood cell with more successes than trials for " + describe(gram));
  }
  d.log_ratio = log_likelihood_ratio(d.with_context, d.without_context);
  return d;
}

}  // namespace

double npmi(const NGramIndex& index, std::span<const std::string> gram) {
  check_gram(gram);
  const auto joint = index.count(gram);
  const auto left = index.count(gram.first(gram.size() - 1));
  const auto right = index.count(gram.subspan(1));
  if (joint == 0 || left == 0 || right == 0) throw UndefinedScore("unobserved n-gram in NPMI for " + describe(gram));
  const double p = index.prob(gram);
  const double pl = index.prob(gram.first(gram.size() - 1));
  const double pr = index.prob(gram.subspan(1));
  return std::log2((p * p) / (pl * pr));
}

double binomial_log_likelihood(std::uint64_t k, std::uint64_t n, double p) {
  double total = 0.0;
  if (k > 0) total += static_cast<double>(k) * std::log2(p);
  if (n > k) total += static_cast<double>(n - k) * std::log2(1.0 - p);
  return total;
}

double log_likelihood_ratio(BinomialCell a, BinomialCell b) {
  const double pooled = static_cast<double>(a.k + b.k) / static_cast<double>(a.n + b.n);
  const double pa = static_cast<double>(a.k) / static_cast<double>(a.n);
  const double pb = static_cast<double>(b.k) / static_cast<double>(b.n);
  // Paired per cell so that identical estimates cancel to exactly 0. The
  // pooled estimate can never beat the per-cell MLEs; a positive residue is
  // rounding.
  const double ratio =
      (binomial_log_likelihood(a.k, a.n, pooled) - binomial_log_likelihood(a.k, a.n, pa)) +
      (binomial_log_likelihood(b.k, b.n, pooled) - binomial_log_likelihood(b.k, b.n, pb));
  return std::min(ratio, 0.0);
}

BllrResult bllr_detail(const NGramIndex& index, std::span<const std::string> gram) {
  check_gram(gram);
  const auto joint = index.count(gram);
  if (joint == 0) throw UndefinedScore("unobserved n-gram in BLLR for " + describe(gram));
  const auto prefix = gram.first(gram.size() - 1);
  const auto suffix = gram.subspan(1);
  const std::uint64_t total = index.total_tokens();

  BllrResult r;
  r.forward = direction(joint, index.count(prefix), index.count(gram.last(1)), total, gram);
  r.backward = direction(joint, index.count(suffix), index.count(gram.first(1)), total, gram);
  r.score = (r.forward.log_ratio + r.backward.log_ratio) / 2.0;
  return r;
}

double dice(const NGramIndex& index, std::span<const std::string> gram, bool doubled) {
  check_gram(gram);
  const auto denominator = index.count(gram.first(gram.size() - 1)) + index.count(gram.subspan(1));
  if (denominator == 0) throw UndefinedScore("zero Dice denominator for " + describe(gram));
  const double numerator = static_cast<double>(index.count(gram)) * (doubled ? 2.0 : 1.0);
  return numerator / static_cast<double>(denominator);
}

ScoreVector raw_scores(const NGramIndex& index, std::span<const std::string> gram,
                       const StatsConfig& cfg, std::string* why) {
  ScoreVector s;
  auto attempt = [&](auto&& fn, std::optional<double>& slot) {
    try {
      slot = fn();
    } catch (const UndefinedScore& e) {
      if (why) {
        if (!why->empty()) *why += "; ";
        *why += e.what();
      }
    }
  };
  attempt([&] { return npmi(index, gram); }, s.npmi);
  attempt([&] { return bllr(index, gram); }, s.bllr);
  attempt([&] { return dice(index, gram, cfg.dice_doubled); }, s.dice);
  return s;
}

RankedList combine_and_rank(std::vector<RankedEntry> entries) {
  RankedList out;
  for (auto& e : entries) {
    if (e.scores.complete()) {
      out.ranked.push_back(std::move(e));
    } else {
      if (e.unscored_reason.empty()) e.unscored_reason = "missing association score";
      out.unscored.push_back(std::move(e));
    }
  }

  if (!out.ranked.empty()) {
    double npmi_lo = *out.ranked.front().scores.npmi;
    double npmi_hi = npmi_lo;
    double bllr_hi = 0.0;
    double dice_hi = 0.0;
    for (const auto& e : out.ranked) {
      npmi_lo = std::min(npmi_lo, *e.scores.npmi);
      npmi_hi = std::max(npmi_hi, *e.scores.npmi);
      bllr_hi = std::max(bllr_hi, -*e.scores.bllr);
      dice_hi = std::max(dice_hi, *e.scores.dice);
    }
    for (auto& e : out.ranked) {
      ScoreVector& s = e.scores;
      s.norm_npmi = npmi_hi == npmi_lo ? 1.0 : (*s.npmi - npmi_lo) / (npmi_hi - npmi_lo);
      s.norm_bllr = bllr_hi == 0.0 ? 1.0 : -*s.bllr / bllr_hi;
      s.norm_dice = dice_hi == 0.0 ? 1.0 : *s.dice / dice_hi;
      s.combined = (s.norm_npmi + s.norm_bllr + s.norm_dice) * e.candidate.weight;
    }
  }

  auto tie_break = [](const RankedEntry& a, const RankedEntry& b) {
    if (a.count != b.count) return a.count > b.count;
    if (a.candidate.grams != b.candidate.grams) return a.candidate.grams < b.candidate.grams;
    return a.candidate.category < b.candidate.category;
  };
  std::sort(out.ranked.begin(), out.ranked.end(), [&](const RankedEntry& a, const RankedEntry& b) {
    if (a.scores.combined != b.scores.combined) return a.scores.combined > b.scores.combined;
    return tie_break(a, b);
  });
  std::sort(out.unscored.begin(), out.unscored.end(), [&](const RankedEntry& a, const RankedEntry& b) {
    if (a.candidate.weight != b.candidate.weight) return a.candidate.weight > b.candidate.weight;
    return tie_break(a, b);
  });
  return out;
}

}  // namespace mwe
