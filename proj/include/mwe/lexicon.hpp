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

#ifndef MWE_LEXICON_HPP_
#define MWE_LEXICON_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mwe/corpus.hpp"

namespace mwe {

struct Synset {
  std::string id;
  CoarseTag pos = CoarseTag::Other;
  std::vector<std::string> lemmas;
  std::vector<std::string> hypernym_ids;
  std::vector<std::string> antonym_ids;
  std::optional<std::string> onto_category;  // e.g. VOA, VOS, VOO, ABSTRACT_NOUN
};

struct LemmaSuggestion {
  std::string stem;
  std::vector<std::string> lemmas;
  std::size_t match_depth = 0;  // stem length in scalars

  bool operator==(const LemmaSuggestion&) const = default;
};

/// Prefix tree over lemma scalars. Nodes live in one vector; index 0 is the
/// root, and every node keeps its parent so a match can be traced back.
class LemmaTrie {
 public:
  struct Node {
    char32_t edge = 0;
    std::uint32_t parent = 0;
    std::map<char32_t, std::uint32_t> children;
    bool end_of_word = false;
    std::set<CoarseTag> pos;
    std::set<std::uint32_t> synsets;  // indices into Lexicon::synsets()
  };

  LemmaTrie() : nodes_(1) {}

  void insert(std::u32string_view word, CoarseTag pos, std::uint32_t synset);

  /// Node spelling exactly `word`, if any (need not be end-of-word).
  std::optional<std::uint32_t> find(std::u32string_view word) const;

  /// Deepest node reachable by a prefix of `word`, and that prefix length.
  std::pair<std::uint32_t, std::size_t> longest_prefix(std::u32string_view word) const;

  std::u32string spell(std::uint32_t node) const;

  /// Every end-of-word string in the subtree rooted at `node`, in
  /// scalar order.
  std::vector<std::u32string> words_below(std::uint32_t node) const;

  const Node& node(std::uint32_t id) const { return nodes_[id]; }
  std::size_t size() const { return nodes_.size(); }

 private:
  std::vector<Node> nodes_;
};

/// Wordnet-style lexicon: synsets plus a trie over every lemma.
class Lexicon {
 public:
  Lexicon() = default;

  /// One synset per line:
  ///   id<TAB>pos<TAB>lemmas<TAB>hypernymIds<TAB>antonymIds<TAB>ontoCategory
  /// with comma-joined lists; the last three fields may be empty or absent.
  /// Malformed lines throw ParseError. Dangling ids are dropped and listed in
  /// dangling_references().
  static Lexicon load(const std::filesystem::path& path);
  static Lexicon parse(std::string_view text, std::string_view source_name = "<lexicon>");
  static Lexicon from_synsets(std::vector<Synset> synsets);

  bool contains(std::string_view word) const;

  /// Exact hit: stem = lemma = word at every level. Otherwise the deepest
  /// trie match, raised `backtrack_level` parents (clamped at the root), with
  /// every lemma below it ranked by |len(lemma) - len(word)| then bytewise.
  /// A word sharing no first scalar with the lexicon yields an empty
  /// suggestion.
  LemmaSuggestion lemmatize(std::string_view word, std::size_t backtrack_level = 0) const;

  /// Level-0 lemmas the filters may trust: the word itself on an exact hit,
  /// otherwise only when the stem spans at least half the word and at least
  /// two scalars (the whole word if shorter). A one-letter overlap says
  /// nothing about the word, so it yields nothing.
  std::vector<std::string> base_forms(std::string_view word) const;

  bool are_synonyms(std::string_view w1, std::string_view w2) const;
  bool are_antonyms(std::string_view w1, std::string_view w2) const;
  bool are_sister_words(std::string_view w1, std::string_view w2) const;

  std::set<std::string> onto_category(std::string_view word, CoarseTag pos) const;

  std::span<const Synset> synsets() const { return synsets_; }
  const Synset* synset(std::string_view id) const;
  std::vector<const Synset*> synsets_of(std::string_view word) const;

  const std::vector<std::string>& dangling_references() const { return dangling_; }
  const LemmaTrie& trie() const { return trie_; }
  bool empty() const { return synsets_.empty(); }

 private:
  void index_synsets();
  std::vector<std::uint32_t> synset_indices(std::string_view word) const;

  std::vector<Synset> synsets_;
  std::unordered_map<std::string, std::uint32_t> by_id_;
  LemmaTrie trie_;
  std::vector<std::string> dangling_;
};

}  // namespace mwe

#endif  // MWE_LEXICON_HPP_
