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

#include "mwe/lexicon.hpp"

#include <algorithm>

#include "mwe/error.hpp"
#include "mwe/text_io.hpp"
#include "mwe/unicode.hpp"

namespace mwe {

// ---------------------------------------------------------------------------
// LemmaTrie

void LemmaTrie::insert(std::u32string_view word, CoarseTag pos, std::uint32_t synset) {
  std::uint32_t cur = 0;
  for (char32_t c : word) {
    auto it = nodes_[cur].children.find(c);
    if (it != nodes_[cur].children.end()) {
      cur = it->second;
      continue;
    }
    const auto next = static_cast<std::uint32_t>(nodes_.size());
    Node child;
    child.edge = c;
    child.parent = cur;
    nodes_.push_back(std::move(child));
    nodes_[cur].children.emplace(c, next);
    cur = next;
  }
  Node& leaf = nodes_[cur];
  leaf.end_of_word = true;
  leaf.pos.insert(pos);
  leaf.synsets.insert(synset);
}

std::optional<std::uint32_t> LemmaTrie::find(std::u32string_view word) const {
  auto [node, depth] = longest_prefix(word);
  if (depth != word.size()) return std::nullopt;
  return node;
}

std::pair<std::uint32_t, std::size_t> LemmaTrie::longest_prefix(std::u32string_view word) const {
  std::uint32_t cur = 0;
  std::size_t depth = 0;
  for (char32_t c : word) {
    auto it = nodes_[cur].children.find(c);
    if (it == nodes_[cur].children.end()) break;
    cur = it->second;
    ++depth;
  }
  return {cur, depth};
}

std::u32string LemmaTrie::spell(std::uint32_t node) const {
  std::u32string out;
  while (node != 0) {
    out.push_back(nodes_[node].edge);
    node = nodes_[node].parent;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::u32string> LemmaTrie::words_below(std::uint32_t node) const {
  std::vector<std::u32string> out;
  std::u32string prefix = spell(node);
  // iterative DFS; children are visited in scalar order
  struct Frame {
    std::uint32_t node;
    std::map<char32_t, std::uint32_t>::const_iterator next;
  };
  std::vector<Frame> stack;
  if (nodes_[node].end_of_word) out.push_back(prefix);
  stack.push_back({node, nodes_[node].children.begin()});
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next == nodes_[top.node].children.end()) {
      stack.pop_back();
      if (!stack.empty()) prefix.pop_back();
      continue;
    }
    const std::uint32_t child = (top.next++)->second;
    prefix.push_back(nodes_[child].edge);
    if (nodes_[child].end_of_word) out.push_back(prefix);
    stack.push_back({child, nodes_[child].children.begin()});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lexicon

Lexicon Lexicon::load(const std::filesystem::path& path) {
  return parse(read_file(path), path.string());
}

Lexicon Lexicon::parse(std::string_view text, std::string_view source_name) {
  const std::string source(source_name);
  std::vector<Synset> synsets;
  std::unordered_map<std::string, std::size_t> seen;

  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (trim(line).empty() || line.front() == '#') return;
    if (auto bad = text::find_invalid_utf8(line)) {
      throw ParseError(source, line_no, "invalid UTF-8 at byte " + std::to_string(*bad));
    }
    const std::string normalized = text::nfc(line);
    const auto fields = split(normalized, '\t');
    if (fields.size() < 3 || fields.size() > 6) {
      throw ParseError(source, line_no, "expected 3 to 6 tab-separated fields");
    }
    Synset s;
    s.id = std::string(trim(fields[0]));
    if (s.id.empty()) throw ParseError(source, line_no, "empty synset id");
    const auto pos = parse_coarse_tag(trim(fields[1]));
    if (!pos) throw ParseError(source, line_no, "unknown pos '" + std::string(fields[1]) + "'");
    s.pos = *pos;
    s.lemmas = split_list(fields[2]);
    if (s.lemmas.empty()) throw ParseError(source, line_no, "synset has no lemmas");
    for (const auto& lemma : s.lemmas) {
      if (std::any_of(lemma.begin(), lemma.end(), is_ascii_space)) {
        throw ParseError(source, line_no, "lemma '" + lemma + "' contains whitespace");
      }
    }
    if (fields.size() > 3) s.hypernym_ids = split_list(fields[3]);
    if (fields.size() > 4) s.antonym_ids = split_list(fields[4]);
    if (fields.size() > 5) {
      auto onto = trim(fields[5]);
      if (!onto.empty()) s.onto_category = std::string(onto);
    }
    if (!seen.emplace(s.id, line_no).second) {
      throw ParseError(source, line_no, "duplicate synset id '" + s.id + "'");
    }
    synsets.push_back(std::move(s));
  });
  return from_synsets(std::move(synsets));
}

Lexicon Lexicon::from_synsets(std::vector<Synset> synsets) {
  Lexicon lex;
  lex.synsets_ = std::move(synsets);
  for (auto& s : lex.synsets_) {
    for (auto& lemma : s.lemmas) lemma = text::nfc(lemma);
  }
  lex.index_synsets();
  return lex;
}

void Lexicon::index_synsets() {
  for (std::uint32_t i = 0; i < synsets_.size(); ++i) {
    if (!by_id_.emplace(synsets_[i].id, i).second) {
      throw Error("duplicate synset id '" + synsets_[i].id + "'");
    }
  }
  auto prune = [&](Synset& s, std::vector<std::string>& ids, const char* relation) {
    std::erase_if(ids, [&](const std::string& id) {
      if (by_id_.count(id)) return false;
      dangling_.push_back(s.id + " " + relation + " " + id);
      return true;
    });
  };
  for (std::uint32_t i = 0; i < synsets_.size(); ++i) {
    Synset& s = synsets_[i];
    prune(s, s.hypernym_ids, "hypernym");
    prune(s, s.antonym_ids, "antonym");
    for (const auto& lemma : s.lemmas) trie_.insert(text::to_scalars(lemma), s.pos, i);
  }
}

const Synset* Lexicon::synset(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  return it == by_id_.end() ? nullptr : &synsets_[it->second];
}

std::vector<std::uint32_t> Lexicon::synset_indices(std::string_view word) const {
  if (word.empty()) return {};
  const auto node = trie_.find(text::to_scalars(text::nfc(word)));
  if (!node || !trie_.node(*node).end_of_word) return {};
  const auto& ids = trie_.node(*node).synsets;
  return {ids.begin(), ids.end()};
}

std::vector<const Synset*> Lexicon::synsets_of(std::string_view word) const {
  std::vector<const Synset*> out;
  for (auto i : synset_indices(word)) out.push_back(&synsets_[i]);
  return out;
}

bool Lexicon::contains(std::string_view word) const { return !synset_indices(word).empty(); }

LemmaSuggestion Lexicon::lemmatize(std::string_view word, std::size_t backtrack_level) const {
  LemmaSuggestion out;
  if (word.empty()) return out;
  const std::string normalized = text::nfc(word);
  if (contains(normalized)) {
    out.stem = normalized;
    out.lemmas = {normalized};
    out.match_depth = text::scalar_length(normalized);
    return out;
  }
  const std::u32string scalars = text::to_scalars(normalized);
  auto [node, depth] = trie_.longest_prefix(scalars);
  if (depth == 0) return out;
  for (std::size_t i = 0; i < backtrack_level && node != 0; ++i) node = trie_.node(node).parent;

  const std::u32string stem = trie_.spell(node);
  out.stem = text::from_scalars(stem);
  out.match_depth = stem.size();

  struct Ranked {
    std::size_t distance;
    std::string lemma;
  };
  std::vector<Ranked> ranked;
  for (const auto& lemma : trie_.words_below(node)) {
    const std::size_t distance =
        lemma.size() > scalars.size() ? lemma.size() - scalars.size() : scalars.size() - lemma.size();
    ranked.push_back({distance, text::from_scalars(lemma)});
  }
  std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
    return a.distance != b.distance ? a.distance < b.distance : a.lemma < b.lemma;
  });
  for (auto& r : ranked) out.lemmas.push_back(std::move(r.lemma));
  return out;
}

std::vector<std::string> Lexicon::base_forms(std::string_view word) const {
  auto s = lemmatize(word, 0);
  if (s.lemmas.empty()) return {};
  const std::size_t len = text::scalar_length(text::nfc(word));
  const bool anchored = s.match_depth >= std::min<std::size_t>(2, len) && 2 * s.match_depth >= len;
  return anchored ? std::move(s.lemmas) : std::vector<std::string>{};
}

bool Lexicon::are_synonyms(std::string_view w1, std::string_view w2) const {
  const auto a = synset_indices(w1);
  const auto b = synset_indices(w2);
  return std::any_of(a.begin(), a.end(),
                     [&](std::uint32_t i) { return std::find(b.begin(), b.end(), i) != b.end(); });
}

bool Lexicon::are_antonyms(std::string_view w1, std::string_view w2) const {
  const auto a = synset_indices(w1);
  const auto b = synset_indices(w2);
  auto links = [&](std::uint32_t from, std::uint32_t to) {
    const auto& ids = synsets_[from].antonym_ids;
    return std::find(ids.begin(), ids.end(), synsets_[to].id) != ids.end();
  };
  for (auto i : a) {
    for (auto j : b) {
      if (links(i, j) || links(j, i)) return true;
    }
  }
  return false;
}

bool Lexicon::are_sister_words(std::string_view w1, std::string_view w2) const {
  const auto a = synset_indices(w1);
  const auto b = synset_indices(w2);
  for (auto i : a) {
    for (auto j : b) {
      if (i == j) continue;
      for (const auto& h : synsets_[i].hypernym_ids) {
        const auto& other = synsets_[j].hypernym_ids;
        if (std::find(other.begin(), other.end(), h) != other.end()) return true;
      }
    }
  }
  return false;
}

std::set<std::string> Lexicon::onto_category(std::string_view word, CoarseTag pos) const {
  std::set<std::string> out;
  for (auto i : synset_indices(word)) {
    const Synset& s = synsets_[i];
    if (s.pos == pos && s.onto_category) out.insert(*s.onto_category);
  }
  return out;
}

}  // namespace mwe
