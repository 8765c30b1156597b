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

#include "mwe/corpus.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <utility>

#include "mwe/error.hpp"
#include "mwe/text_io.hpp"
#include "mwe/unicode.hpp"

namespace mwe {

namespace {

constexpr std::array<std::pair<CoarseTag, std::string_view>, 5> kTagNames{{
    {CoarseTag::Noun, "NOUN"},
    {CoarseTag::Verb, "VERB"},
    {CoarseTag::Adj, "ADJ"},
    {CoarseTag::Adv, "ADV"},
    {CoarseTag::Other, "OTHER"},
}};

}  // namespace

std::string_view to_string(CoarseTag tag) {
  for (const auto& [t, name] : kTagNames) {
    if (t == tag) return name;
  }
  return "OTHER";
}

std::optional<CoarseTag> parse_coarse_tag(std::string_view name) {
  for (const auto& [t, n] : kTagNames) {
    if (n == name) return t;
  }
  return std::nullopt;
}

TagsetMap TagsetMap::builtin() {
  TagsetMap map;
  for (const char* t : {"NN", "NNP", "NNC", "NNPC", "NNS", "NNPS"}) map.set(t, CoarseTag::Noun);
  for (const char* t : {"VB", "VBD", "VBG", "VBP", "VBN", "VBZ", "VM"}) map.set(t, CoarseTag::Verb);
  for (const char* t : {"JJ", "JJR", "JJS", "JJC"}) map.set(t, CoarseTag::Adj);
  for (const char* t : {"RB", "RBR", "RBS", "RBC"}) map.set(t, CoarseTag::Adv);
  return map;
}

TagsetMap TagsetMap::load(const std::filesystem::path& path) {
  if (path.empty() || !std::filesystem::exists(path)) return builtin();
  TagsetMap map;
  const std::string source = path.string();
  for_each_line(read_file(path), [&](std::size_t line_no, std::string_view line) {
    if (line.empty() || line.front() == '#') return;
    const auto fields = split(line, '\t');
    if (fields.size() != 2) throw ParseError(source, line_no, "expected RAWTAG<TAB>CLASS");
    const auto tag = parse_coarse_tag(trim(fields[1]));
    if (!tag) throw ParseError(source, line_no, "unknown class '" + std::string(fields[1]) + "'");
    map.set(std::string(trim(fields[0])), *tag);
  });
  return map;
}

CoarseTag TagsetMap::classify(std::string_view raw_tag) const {
  auto it = entries_.find(std::string(raw_tag));
  return it == entries_.end() ? default_class_ : it->second;
}

bool has_internal_hyphen(std::string_view surface) {
  for (std::size_t i = 1; i + 1 < surface.size(); ++i) {
    if (surface[i] == '-' && surface[i - 1] != '-' && surface[i + 1] != '-') return true;
  }
  return false;
}

TaggedCorpus parse_corpus_text(std::string_view text, const TagsetMap& tagset,
                               std::string language_id, std::string_view source_name) {
  TaggedCorpus corpus;
  corpus.language_id = std::move(language_id);
  const std::string source(source_name);

  for_each_line(text, [&](std::size_t line_no, std::string_view raw_line) {
    if (auto bad = text::find_invalid_utf8(raw_line)) {
      throw ParseError(source, line_no, "invalid UTF-8 at byte " + std::to_string(*bad));
    }
    const std::string line = text::nfc(raw_line);
    Sentence sentence;
    for (std::string_view field : split_whitespace(line)) {
      Token token;
      const auto cut = field.rfind('_');
      if (cut == std::string_view::npos) {
        token.surface = std::string(field);
      } else {
        token.surface = std::string(field.substr(0, cut));
        token.raw_tag = std::string(field.substr(cut + 1));
      }
      if (token.surface.empty()) {
        throw ParseError(source, line_no, "token '" + std::string(field) + "' has an empty surface");
      }
      token.coarse_tag = tagset.classify(token.raw_tag);
      token.sentence_index = corpus.sentences.size();
      token.position = sentence.size();
      token.has_internal_hyphen = has_internal_hyphen(token.surface);
      sentence.push_back(std::move(token));
    }
    if (sentence.empty()) return;
    corpus.token_count += sentence.size();
    corpus.sentences.push_back(std::move(sentence));
  });

  if (corpus.token_count == 0) throw ParseError(source, 0, "corpus contains no tokens");
  return corpus;
}

TaggedCorpus parse_corpus(const std::filesystem::path& path, const TagsetMap& tagset,
                          std::string language_id) {
  return parse_corpus_text(read_file(path), tagset, std::move(language_id), path.string());
}

std::string serialize_corpus(const TaggedCorpus& corpus) {
  std::string out;
  for (const auto& sentence : corpus.sentences) {
    for (std::size_t i = 0; i < sentence.size(); ++i) {
      if (i) out += ' ';
      out += sentence[i].surface;
      if (!sentence[i].raw_tag.empty()) {
        out += '_';
        out += sentence[i].raw_tag;
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace mwe
