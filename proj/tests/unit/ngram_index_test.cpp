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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "mwe/error.hpp"
#include "mwe/ngram_index.hpp"
#include "test_support.hpp"
#include "toy1_expected.hpp"

namespace {

using testing_support::corpus;
using testing_support::gram;

mwe::NGramIndex toy1_index() { return mwe::NGramIndex::build(corpus(toy1::kCorpus)); }

TEST(NGramIndex, Toy1Counts) {
  const auto index = toy1_index();
  EXPECT_EQ(index.total_tokens(), toy1::kTotalTokens);
  EXPECT_EQ(index.sentence_count(), 3u);
  std::size_t listed = 0;
  for (const auto& c : toy1::kCounts) {
    EXPECT_EQ(index.count(gram(c.gram)), c.count) << c.gram;
    ++listed;
  }
  std::size_t stored = 0;
  for (std::size_t n = 1; n <= mwe::kMaxOrder; ++n) stored += index.distinct(n);
  EXPECT_EQ(stored, listed);
}

TEST(NGramIndex, OrderMatters) {
  const auto index = toy1_index();
  EXPECT_EQ(index.count(gram("a b")), 2u);
  EXPECT_EQ(index.count(gram("b a")), 0u);
  EXPECT_EQ(index.count(gram("zzz")), 0u);
}

TEST(NGramIndex, Probabilities) {
  const auto index = toy1_index();
  EXPECT_EQ(index.prob(gram("a b")), 2.0 / 9.0);
  EXPECT_EQ(index.prob(gram("b")), 3.0 / 9.0);
  EXPECT_EQ(index.prob(gram("b a")), 0.0);
}

TEST(NGramIndex, LengthOutOfRange) {
  const auto index = toy1_index();
  EXPECT_THROW(index.count(mwe::Gram{}), std::out_of_range);
  EXPECT_THROW(index.count(gram("a b c d e f")), std::out_of_range);
  EXPECT_THROW(index.prob(mwe::Gram{}), std::out_of_range);
}

TEST(NGramIndex, SingleTokenSentenceHasNoBigrams) {
  const auto index = mwe::NGramIndex::build(corpus("x_NN\n"));
  EXPECT_EQ(index.distinct(1), 1u);
  EXPECT_EQ(index.distinct(2), 0u);
}

TEST(NGramIndex, NoCrossSentenceGrams) {
  const auto index = mwe::NGramIndex::build(corpus("a_NN\nb_NN\n"));
  EXPECT_EQ(index.count(gram("a b")), 0u);
}

TEST(NGramIndex, DuplicatedCorpusDoublesCounts) {
  const std::string text(toy1::kCorpus);
  const auto once = toy1_index();
  const auto twice = mwe::NGramIndex::build(corpus(text + text));
  EXPECT_EQ(twice.total_tokens(), 2 * once.total_tokens());
  for (std::size_t n = 1; n <= mwe::kMaxOrder; ++n) {
    for (const auto& [g, c] : once.grams(n)) EXPECT_EQ(twice.count(g), 2 * c);
    EXPECT_EQ(twice.distinct(n), once.distinct(n));
  }
}

TEST(NGramIndex, SentenceOrderDoesNotMatter) {
  std::mt19937_64 rng(7);
  const std::string text = testing_support::random_corpus_text(rng);
  auto lines = mwe::split(text, '\n');
  std::vector<std::string> shuffled(lines.begin(), lines.end());
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  std::string permuted;
  for (const auto& l : shuffled) permuted += l + "\n";
  const auto a = mwe::NGramIndex::build(corpus(text));
  const auto b = mwe::NGramIndex::build(corpus(permuted));
  for (std::size_t n = 1; n <= mwe::kMaxOrder; ++n) EXPECT_EQ(a.grams(n), b.grams(n));
}

TEST(NGramIndex, MatchesOracleAndPrefixSuffixConsistency) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 20; ++round) {
    const auto c = corpus(testing_support::random_corpus_text(rng));
    const auto index = mwe::NGramIndex::build(c);
    const auto words = testing_support::surfaces(c);
    for (std::size_t n = 1; n <= mwe::kMaxOrder; ++n) {
      const auto expected = oracle::grams(words, n);
      ASSERT_EQ(index.distinct(n), expected.size());
      for (const auto& g : expected) ASSERT_EQ(index.count(g), oracle::count(words, g));
      if (n == mwe::kMaxOrder) continue;
      // Extending a gram to the right can only lose the occurrences that end
      // a sentence; likewise to the left for those that start one.
      for (const auto& [g, count] : index.grams(n)) {
        std::uint64_t right = 0, left = 0;
        for (const auto& [h, hc] : index.grams(n + 1)) {
          if (std::equal(g.begin(), g.end(), h.begin())) right += hc;
          if (std::equal(g.begin(), g.end(), h.begin() + 1)) left += hc;
        }
        std::uint64_t at_end = 0, at_start = 0;
        for (const auto& s : words) {
          if (s.size() >= n && std::equal(g.begin(), g.end(), s.end() - static_cast<std::ptrdiff_t>(n))) ++at_end;
          if (s.size() >= n && std::equal(g.begin(), g.end(), s.begin())) ++at_start;
        }
        ASSERT_EQ(right + at_end, count);
        ASSERT_EQ(left + at_start, count);
      }
    }
  }
}

TEST(NGramIndex, DumpLoadRoundTrip) {
  const auto index = toy1_index();
  std::stringstream first;
  index.dump(first);
  const auto text = first.str();
  EXPECT_EQ(text.rfind("#N=9\n", 0), 0u);
  std::istringstream in(text);
  const auto loaded = mwe::NGramIndex::load(in);
  std::stringstream second;
  loaded.dump(second);
  EXPECT_EQ(second.str(), text);
  EXPECT_EQ(loaded.count(gram("a b")), 2u);
}

TEST(NGramIndex, LoadRejectsGarbage) {
  std::istringstream in("#N=3\n2\ta b\tmany\n");
  EXPECT_THROW(mwe::NGramIndex::load(in), mwe::ParseError);
}

TEST(NGramIndex, BuildRejectsBadOrder) {
  const auto c = corpus(toy1::kCorpus);
  EXPECT_THROW(mwe::NGramIndex::build(c, 1), mwe::Error);
  EXPECT_THROW(mwe::NGramIndex::build(c, 6), mwe::Error);
}

}  // namespace
