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

#include "mwe/complex_predicate.hpp"
#include "mwe/error.hpp"
#include "mwe/linguistic_filters.hpp"
#include "mwe/semantic_filter.hpp"
#include "test_support.hpp"

namespace {

using mwe::Category;
using testing_support::fixture;
using testing_support::gram;

const mwe::Lexicon& hindi() {
  static const auto lex = mwe::Lexicon::load(fixture("hindi_lexicon.tsv"));
  return lex;
}

mwe::Candidate cand(std::string_view g, Category cat) {
  mwe::Candidate c;
  c.grams = gram(g);
  c.category = cat;
  return c;
}

TEST(VerbGate, CompoundVerbNeedsVectorVerb) {
  mwe::VerbLists lists{{"जाना", "गया"}, {}};
  const mwe::Lexicon lex = mwe::Lexicon::parse("v\tVERB\tजाना\n");
  EXPECT_TRUE(mwe::verb_gate(cand("गिर गया", Category::CompoundVerb), lists, lex, nullptr));
  EXPECT_TRUE(mwe::verb_gate(cand("चला जाना", Category::CompoundVerb), lists, lex, nullptr));
  EXPECT_FALSE(mwe::verb_gate(cand("खा लिया", Category::CompoundVerb), lists, lex, nullptr));
  EXPECT_FALSE(mwe::verb_gate(cand("खा गया", Category::CompoundVerb), {}, lex, nullptr));
}

TEST(VerbGate, ConjunctVerbViaVerbalizerOrComplexPredicate) {
  mwe::VerbLists lists{{}, {"करना"}};
  const auto rules = mwe::CpRuleSet::defaults();
  EXPECT_TRUE(mwe::verb_gate(cand("बात करना", Category::ConjunctVerb), lists, hindi(), nullptr));
  EXPECT_FALSE(mwe::verb_gate(cand("तसल्ली देना", Category::ConjunctVerb), lists, hindi(), nullptr));
  EXPECT_TRUE(mwe::verb_gate(cand("तसल्ली देना", Category::ConjunctVerb), lists, hindi(), &rules));
  EXPECT_FALSE(mwe::verb_gate(cand("चाय लेना", Category::ConjunctVerb), lists, hindi(), &rules));
}

TEST(VerbGate, OtherCategoriesPass) {
  EXPECT_TRUE(mwe::verb_gate(cand("bus stop", Category::CompoundNoun), {}, hindi(), nullptr));
}

TEST(VerbGate, WeakStemDoesNotCount) {
  const auto lex = mwe::Lexicon::parse("v\tVERB\ttake\nn\tNOUN\ttraffic\n");
  mwe::VerbLists lists{{}, {"take"}};
  EXPECT_FALSE(mwe::verb_gate(cand("light turned", Category::ConjunctVerb), lists, lex, nullptr));
  EXPECT_TRUE(mwe::verb_gate(cand("care takes", Category::ConjunctVerb), lists, lex, nullptr));
}

TEST(ComplexPredicate, AbstractNounAccepted) {
  const auto rules = mwe::CpRuleSet::defaults();
  const auto d = mwe::is_conjunct(hindi(), "तसल्ली", "देना", rules);
  EXPECT_TRUE(d.accepted);
  EXPECT_EQ(d.matched, std::make_pair(std::string("VOA"), std::string("ABSTRACT_NOUN")));
  EXPECT_TRUE(mwe::is_conjunct(hindi(), "गर्व", "होना", rules));
}

TEST(ComplexPredicate, ConcreteNounRejected) {
  EXPECT_FALSE(mwe::is_conjunct(hindi(), "चाय", "लेना", mwe::CpRuleSet::defaults()));
}

TEST(ComplexPredicate, InflectedVerbFallsBackToLemma) {
  EXPECT_TRUE(mwe::is_conjunct(hindi(), "तसल्ली", "देते", mwe::CpRuleSet::defaults()));
}

TEST(ComplexPredicate, RuleTable) {
  auto rules = mwe::CpRuleSet::parse("VOA\tCONCRETE_NOUN\taccept\nVOO\tABSTRACT_NOUN\treject\n");
  EXPECT_TRUE(mwe::is_conjunct(hindi(), "चाय", "लेना", rules));
  EXPECT_FALSE(mwe::is_conjunct(hindi(), "गर्व", "होना", rules));
  EXPECT_THROW(mwe::CpRuleSet::parse("VOA\tX\tmaybe\n"), mwe::ParseError);
  EXPECT_THROW(mwe::CpRuleSet::parse("VOA\tX\taccept\nVOA\tX\treject\n"), mwe::ParseError);
  EXPECT_FALSE(mwe::is_conjunct(hindi(), "तसल्ली", "देना", mwe::CpRuleSet{}));
}

TEST(NamedEntity, DownWeightsByDefault) {
  const auto nel = mwe::NamedEntityList::parse("New York\nDelhi\n");
  const mwe::FilterConfig cfg;
  EXPECT_TRUE(mwe::ne_matches(cand("New York", Category::CompoundNoun), nel));
  EXPECT_TRUE(mwe::ne_matches(cand("New York City", Category::NounCompoundNgram), nel));
  EXPECT_TRUE(mwe::ne_matches(cand("Delhi police", Category::CompoundNoun), nel));
  EXPECT_TRUE(mwe::ne_matches(cand("York Minster", Category::CompoundNoun), nel));
  EXPECT_FALSE(mwe::ne_matches(cand("bus stop", Category::CompoundNoun), nel));
  const auto c = mwe::ne_weight(cand("New York", Category::CompoundNoun), nel, cfg);
  EXPECT_DOUBLE_EQ(c.weight, 0.5);
  EXPECT_TRUE(c.provenance.count("NE"));
  EXPECT_DOUBLE_EQ(mwe::ne_weight(cand("bus stop", Category::CompoundNoun), nel, cfg).weight, 1.0);
}

TEST(Hyphen, Boost) {
  const mwe::FilterConfig cfg;
  EXPECT_DOUBLE_EQ(mwe::hyphen_weight(cand("well-known", Category::Hyphenated), cfg).weight, 1.5);
  EXPECT_DOUBLE_EQ(mwe::hyphen_weight(cand("bus stop", Category::CompoundNoun), cfg).weight, 1.0);
}

TEST(WordLists, MissingPathIsEmptyButBadFileThrows) {
  EXPECT_TRUE(mwe::load_word_list({}).empty());
  EXPECT_THROW(mwe::load_word_list("/nonexistent/list.txt"), mwe::IoError);
}

TEST(Semantic, Relations) {
  EXPECT_EQ(mwe::semantic_relation(hindi(), "रिश्ते", "नाते").relation, mwe::Relation::Synonym);
  EXPECT_EQ(mwe::semantic_relation(hindi(), "जीना", "मरना").relation, mwe::Relation::Antonym);
  EXPECT_EQ(mwe::semantic_relation(hindi(), "भाई", "बहैन").relation, mwe::Relation::Sister);
  EXPECT_EQ(mwe::semantic_relation(hindi(), "घर", "चाय").relation, mwe::Relation::None);
}

TEST(Semantic, ViaLemmas) {
  const auto v = mwe::semantic_relation(hindi(), "जीने", "मरने");
  EXPECT_EQ(v.relation, mwe::Relation::Antonym);
  ASSERT_TRUE(v.via_lemmas);
  EXPECT_EQ(v.via_lemmas->first, "जीना");
}

TEST(Semantic, TagsWithoutDropping) {
  const auto c = mwe::semantic_tag(cand("रिश्ते नाते", Category::CompoundNoun), hindi());
  EXPECT_TRUE(c.provenance.count("SEMANTIC:SYNONYM"));
  EXPECT_DOUBLE_EQ(c.weight, 1.0);
  EXPECT_TRUE(mwe::semantic_tag(cand("घर चाय", Category::CompoundNoun), hindi()).provenance.empty());
}

TEST(Semantic, Bengali) {
  const auto lex = mwe::Lexicon::load(fixture("bengali_lexicon.tsv"));
  EXPECT_EQ(mwe::semantic_relation(lex, "আকাশ", "পাতাল").relation, mwe::Relation::Antonym);
}

}  // namespace
