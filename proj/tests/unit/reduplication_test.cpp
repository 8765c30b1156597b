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

#include "mwe/reduplication.hpp"
#include "test_support.hpp"

namespace {

using mwe::RedupKind;
using testing_support::fixture;

const mwe::Lexicon& hindi() {
  static const auto lex = mwe::Lexicon::load(fixture("hindi_lexicon.tsv"));
  return lex;
}

TEST(Reduplication, Full) {
  EXPECT_EQ(mwe::classify_reduplication(hindi(), "घर", "घर").kind, RedupKind::Full);
  EXPECT_EQ(mwe::classify_reduplication(hindi(), "Knock", "knock").kind, RedupKind::Full);
}

TEST(Reduplication, MeaningfulViaLemmas) {
  const auto v = mwe::classify_reduplication(hindi(), "चलते", "फिरते");
  EXPECT_EQ(v.kind, RedupKind::PartialMeaningful);
  EXPECT_EQ(v.evidence.lemma1, "चलना");
  EXPECT_EQ(v.evidence.lemma2, "फिरना");
  EXPECT_EQ(v.evidence.shared_suffix_len, 2u);
}

TEST(Reduplication, MeaningfulWhenBothWordsAreStored) {
  const auto lex = mwe::Lexicon::parse("a\tNOUN\tfuzzy\nb\tNOUN\twuzzy\n");
  EXPECT_EQ(mwe::classify_reduplication(lex, "fuzzy", "wuzzy").kind, RedupKind::PartialMeaningful);
}

TEST(Reduplication, EchoWord) {
  const auto v = mwe::classify_reduplication(hindi(), "चाय", "वाय");
  EXPECT_EQ(v.kind, RedupKind::PartialNonmeaningful);
  EXPECT_EQ(v.evidence.prefix_delta_len, 1u);
}

TEST(Reduplication, EchoWordIsDirectional) {
  EXPECT_NE(mwe::classify_reduplication(hindi(), "वाय", "चाय").kind, RedupKind::PartialNonmeaningful);
}

TEST(Reduplication, PrefixDeltaLimit) {
  const auto lex = mwe::Lexicon::parse("a\tNOUN\tabcdef\n");
  EXPECT_EQ(mwe::classify_reduplication(lex, "abcdef", "xbcdef").kind, RedupKind::PartialNonmeaningful);
  EXPECT_EQ(mwe::classify_reduplication(lex, "abcdef", "xycdef").kind, RedupKind::PartialNonmeaningful);
  EXPECT_EQ(mwe::classify_reduplication(lex, "abcdef", "xyzdef").kind, RedupKind::None);
  EXPECT_EQ(mwe::classify_reduplication(lex, "abcdef", "xyzdef", {.max_prefix_delta = 3}).kind,
            RedupKind::PartialNonmeaningful);
  // a difference beyond the prefix is not an echo
  EXPECT_EQ(mwe::classify_reduplication(lex, "abcdef", "abcdeX").kind, RedupKind::None);
}

TEST(Reduplication, UnrelatedWords) {
  EXPECT_EQ(mwe::classify_reduplication(hindi(), "घर", "चाय").kind, RedupKind::None);
  EXPECT_EQ(mwe::classify_reduplication(hindi(), "", "घर").kind, RedupKind::None);
}

TEST(Reduplication, CorpusDetection) {
  const auto c = testing_support::corpus("वह_PRP चलते_VM फिरते_VM थे_VM\nचाय_NN वाय_NN पी_VM\nचाय_NN वाय_NN\n");
  const auto set = mwe::detect_partial_reduplication(c, hindi());
  ASSERT_EQ(set.size(), 2u);
  EXPECT_EQ(set[0].category, mwe::Category::PartialRedupMeaningful);
  EXPECT_EQ(set[1].category, mwe::Category::PartialRedupNonmeaningful);
  EXPECT_EQ(set[1].occurrences, 2u);
}

}  // namespace
