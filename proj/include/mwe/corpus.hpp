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

#ifndef MWE_CORPUS_HPP_
#define MWE_CORPUS_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mwe {

enum class CoarseTag : std::uint8_t { Noun, Verb, Adj, Adv, Other };

std::string_view to_string(CoarseTag tag);
std::optional<CoarseTag> parse_coarse_tag(std::string_view name);

struct Token {
  std::string surface;  // NFC, non-empty, no whitespace
  std::string raw_tag;  // as found in the corpus; "" when the token had no tag
  CoarseTag coarse_tag = CoarseTag::Other;
  std::size_t sentence_index = 0;
  std::size_t position = 0;
  bool has_internal_hyphen = false;

  bool operator==(const Token&) const = default;
};

using Sentence = std::vector<Token>;

struct TaggedCorpus {
  std::vector<Sentence> sentences;
  std::string language_id;
  std::size_t token_count = 0;

  bool operator==(const TaggedCorpus&) const = default;
};

/// Raw tagger tag -> coarse class. Unmapped tags fall back to `default_class`.
class TagsetMap {
 public:
  TagsetMap() = default;
  explicit TagsetMap(CoarseTag default_class) : default_class_(default_class) {}

  /// NN|NNP|NNC|NNPC -> NOUN, VB|VBD|VBG|VBP|VBN|VBZ|VM -> VERB, plus the
  /// Penn/BIS adjective and adverb tags.
  static TagsetMap builtin();

  /// "RAWTAG<TAB>CLASS" lines. A missing path yields builtin().
  static TagsetMap load(const std::filesystem::path& path);

  void set(std::string raw_tag, CoarseTag tag) { entries_[std::move(raw_tag)] = tag; }
  CoarseTag classify(std::string_view raw_tag) const;
  CoarseTag default_class() const { return default_class_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, CoarseTag> entries_;
  CoarseTag default_class_ = CoarseTag::Other;
};

inline CoarseTag classify_tag(std::string_view raw_tag, const TagsetMap& tagset) {
  return tagset.classify(raw_tag);
}

/// True iff `surface` has a '-' with a non-hyphen character on both sides.
bool has_internal_hyphen(std::string_view surface);

/// One sentence per line, whitespace-separated word_TAG tokens split at the
/// rightmost underscore. Empty lines are skipped. Throws ParseError (with the
/// line number) on invalid UTF-8 and when the input holds no tokens.
TaggedCorpus parse_corpus_text(std::string_view text, const TagsetMap& tagset,
                               std::string language_id, std::string_view source_name = "<corpus>");

TaggedCorpus parse_corpus(const std::filesystem::path& path, const TagsetMap& tagset,
                          std::string language_id);

/// Writes every sentence back as "surface_rawTag" tokens (bare surface when
/// the tag is empty), one sentence per line.
std::string serialize_corpus(const TaggedCorpus& corpus);

}  // namespace mwe

#endif  // MWE_CORPUS_HPP_
