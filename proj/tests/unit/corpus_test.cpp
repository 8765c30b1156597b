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

#include "mwe/corpus.hpp"
#include "mwe/error.hpp"
#include "test_support.hpp"

namespace {

using mwe::CoarseTag;
using testing_support::corpus;

TEST(Corpus, SplitsAtRightmostUnderscore) {
  auto c = corpus("new_york_NNP city_NN\n");
  ASSERT_EQ(c.sentences.size(), 1u);
  EXPECT_EQ(c.sentences[0][0].surface, "new_york");
  EXPECT_EQ(c.sentences[0][0].raw_tag, "NNP");
  EXPECT_EQ(c.sentences[0][0].coarse_tag, CoarseTag::Noun);
  EXPECT_EQ(c.sentences[0][1].position, 1u);
  EXPECT_EQ(c.token_count, 2u);
}

TEST(Corpus, SkipsBlankLinesAndKeepsSentenceIndices) {
  auto c = corpus("a_NN\n\n  \nb_VM c_JJ\r\n");
  ASSERT_EQ(c.sentences.size(), 2u);
  EXPECT_EQ(c.sentences[1][0].sentence_index, 1u);
  EXPECT_EQ(c.sentences[1][0].coarse_tag, CoarseTag::Verb);
  EXPECT_EQ(c.sentences[1][1].coarse_tag, CoarseTag::Adj);
}

TEST(Corpus, UnknownAndMissingTagsFallBack) {
  auto c = corpus("the_DT dog\n");
  EXPECT_EQ(c.sentences[0][0].coarse_tag, CoarseTag::Other);
  EXPECT_EQ(c.sentences[0][1].raw_tag, "");
  EXPECT_EQ(c.sentences[0][1].coarse_tag, CoarseTag::Other);
}

TEST(Corpus, EmptySurfaceIsAnError) {
  try {
    corpus("ok_NN\n_NN\n");
    FAIL() << "expected ParseError";
  } catch (const mwe::ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Corpus, InvalidUtf8IsAnError) {
  EXPECT_THROW(corpus("ok_NN\nbad\xff_NN\n"), mwe::ParseError);
}

TEST(Corpus, EmptyInputIsAnError) {
  EXPECT_THROW(corpus(""), mwe::ParseError);
  EXPECT_THROW(corpus("\n\n"), mwe::ParseError);
}

TEST(Corpus, NormalisesToNfc) {
  // "e" + combining acute vs precomposed U+00E9
  auto c = corpus("caf\x65\xcc\x81_NN caf\xc3\xa9_NN\n");
  EXPECT_EQ(c.sentences[0][0].surface, c.sentences[0][1].surface);
}

TEST(Corpus, InternalHyphen) {
  EXPECT_TRUE(mwe::has_internal_hyphen("well-known"));
  EXPECT_TRUE(mwe::has_internal_hyphen("धीरे-धीरे"));
  EXPECT_FALSE(mwe::has_internal_hyphen("-known"));
  EXPECT_FALSE(mwe::has_internal_hyphen("well-"));
  EXPECT_FALSE(mwe::has_internal_hyphen("-"));
  EXPECT_FALSE(mwe::has_internal_hyphen("a--b"));
}

TEST(Corpus, SerializeRoundTrips) {
  const auto c = corpus("a_NN b_VB\nc d_JJ\n");
  EXPECT_EQ(mwe::serialize_corpus(c), "a_NN b_VB\nc d_JJ\n");
  EXPECT_EQ(corpus(mwe::serialize_corpus(c)), c);
}

TEST(Corpus, TagsetFromFile) {
  const auto path = std::filesystem::temp_directory_path() / "mwex_tagset_test.tsv";
  mwe::write_file(path, "# custom\nXN\tNOUN\nXV\tVERB\n");
  const auto tags = mwe::TagsetMap::load(path);
  EXPECT_EQ(tags.classify("XN"), CoarseTag::Noun);
  EXPECT_EQ(tags.classify("XV"), CoarseTag::Verb);
  EXPECT_EQ(tags.classify("NN"), CoarseTag::Other);
  std::filesystem::remove(path);
  EXPECT_EQ(mwe::TagsetMap::load({}).classify("NN"), CoarseTag::Noun);
}

}  // namespace
