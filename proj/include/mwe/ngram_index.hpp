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

#ifndef MWE_NGRAM_INDEX_HPP_
#define MWE_NGRAM_INDEX_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mwe/corpus.hpp"

namespace mwe {

/// A surface tuple, 1 to 5 tokens.
using Gram = std::vector<std::string>;

inline constexpr std::size_t kMaxOrder = 5;

/// Immutable counts of contiguous within-sentence surface n-grams.
///
/// Every probability is count / totalTokens regardless of n, so the
/// association measures see one consistent maximum-likelihood scale.
class NGramIndex {
 public:
  /// Throws Error on an empty corpus or max_n outside [2, 5].
  static NGramIndex build(const TaggedCorpus& corpus, std::size_t max_n = kMaxOrder);

  /// Reads the TSV produced by dump(). Throws ParseError.
  static NGramIndex load(std::istream& in, std::string_view source_name = "<index>");

  /// Stored count, 0 when absent. Throws std::out_of_range unless
  /// 1 <= gram.size() <= max_order().
  std::uint64_t count(std::span<const std::string> gram) const;
  double prob(std::span<const std::string> gram) const;

  std::uint64_t total_tokens() const { return total_tokens_; }
  std::size_t sentence_count() const { return sentence_count_; }
  std::size_t max_order() const { return max_order_; }
  std::size_t distinct(std::size_t n) const;

  /// All stored n-grams of one order with their counts, sorted by gram.
  std::vector<std::pair<Gram, std::uint64_t>> grams(std::size_t n) const;

  /// "#N=<totalTokens>" header, then "n<TAB>tok1 ... tokN<TAB>count" lines
  /// ordered by n and then by gram.
  void dump(std::ostream& out) const;

 private:
  using Key = std::array<std::uint32_t, kMaxOrder>;
  struct KeyHash {
    std::size_t operator()(const Key& key) const noexcept;
  };
  using Table = std::unordered_map<Key, std::uint64_t, KeyHash>;

  static constexpr std::uint32_t kNoWord = 0xFFFFFFFFu;

  std::uint32_t intern(const std::string& word);
  bool lookup(std::span<const std::string> gram, Key& key) const;
  void check_order(std::size_t n) const;

  std::unordered_map<std::string, std::uint32_t> ids_;
  std::vector<std::string> words_;
  std::array<Table, kMaxOrder> tables_;
  std::uint64_t total_tokens_ = 0;
  std::size_t sentence_count_ = 0;
  std::size_t max_order_ = 0;
};

}  // namespace mwe

#endif  // MWE_NGRAM_INDEX_HPP_
