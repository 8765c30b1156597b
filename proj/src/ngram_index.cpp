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

#include "mwe/ngram_index.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "mwe/error.hpp"
#include "mwe/text_io.hpp"

namespace mwe {

std::size_t NGramIndex::KeyHash::operator()(const Key& key) const noexcept {
  // FNV-1a over the ids
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint32_t id : key) {
    h ^= id;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

std::uint32_t NGramIndex::intern(const std::string& word) {
  auto [it, inserted] = ids_.try_emplace(word, static_cast<std::uint32_t>(words_.size()));
  if (inserted) words_.push_back(word);
  return it->second;
}

bool NGramIndex::lookup(std::span<const std::string> gram, Key& key) const {
  key.fill(kNoWord);
  for (std::size_t i = 0; i < gram.size(); ++i) {
    auto it = ids_.find(gram[i]);
    if (it == ids_.end()) return false;
    key[i] = it->second;
  }
  return true;
}

void NGramIndex::check_order(std::size_t n) const {
  if (n < 1 || n > max_order_) {
    throw std::out_of_range("n-gram length " + std::to_string(n) + " outside [1, " +
                            std::to_string(max_order_) + "]");
  }
}

NGramIndex NGramIndex::build(const TaggedCorpus& corpus, std::size_t max_n) {
  if (max_n < 2 || max_n > kMaxOrder) throw Error("max_n must lie in [2, 5]");
  if (corpus.token_count == 0) throw Error("cannot index an empty corpus");

  NGramIndex index;
  index.max_order_ = max_n;
  index.sentence_count_ = corpus.sentences.size();
  std::vector<std::uint32_t> ids;
  for (const auto& sentence : corpus.sentences) {
    ids.clear();
    for (const auto& token : sentence) ids.push_back(index.intern(token.surface));
    index.total_tokens_ += ids.size();
    for (std::size_t start = 0; start < ids.size(); ++start) {
      Key key;
      key.fill(kNoWord);
      for (std::size_t n = 1; n <= max_n && start + n <= ids.size(); ++n) {
        key[n - 1] = ids[start + n - 1];
        ++index.tables_[n - 1][key];
      }
    }
  }
  return index;
}

std::uint64_t NGramIndex::count(std::span<const std::string> gram) const {
  check_order(gram.size());
  Key key;
  if (!lookup(gram, key)) return 0;
  const auto& table = tables_[gram.size() - 1];
  auto it = table.find(key);
  return it == table.end() ? 0 : it->second;
}

double NGramIndex::prob(std::span<const std::string> gram) const {
  return static_cast<double>(count(gram)) / static_cast<double>(total_tokens_);
}

std::size_t NGramIndex::distinct(std::size_t n) const {
  check_order(n);
  return tables_[n - 1].size();
}

std::vector<std::pair<Gram, std::uint64_t>> NGramIndex::grams(std::size_t n) const {
  check_order(n);
  std::vector<std::pair<Gram, std::uint64_t>> out;
  out.reserve(tables_[n - 1].size());
  for (const auto& [key, c] : tables_[n - 1]) {
    Gram gram;
    gram.reserve(n);
    for (std::size_t i = 0; i < n; ++i) gram.push_back(words_[key[i]]);
    out.emplace_back(std::move(gram), c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void NGramIndex::dump(std::ostream& out) const {
  out << "#N=" << total_tokens_ << '\n';
  out << "#sentences=" << sentence_count_ << '\n';
  out << "#max_n=" << max_order_ << '\n';
  for (std::size_t n = 1; n <= max_order_; ++n) {
    for (const auto& [gram, c] : grams(n)) {
      out << n << '\t' << join(gram, " ") << '\t' << c << '\n';
    }
  }
}

NGramIndex NGramIndex::load(std::istream& in, std::string_view source_name) {
  const std::string source(source_name);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  NGramIndex index;
  bool have_total = false;
  std::size_t highest = 0;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (line.empty()) return;
    if (line.front() == '#') {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) return;
      const auto key = line.substr(1, eq - 1);
      const auto value = parse_int<std::uint64_t>(line.substr(eq + 1));
      if (!value) throw ParseError(source, line_no, "bad header value");
      if (key == "N") {
        index.total_tokens_ = *value;
        have_total = true;
      } else if (key == "sentences") {
        index.sentence_count_ = static_cast<std::size_t>(*value);
      } else if (key == "max_n") {
        index.max_order_ = static_cast<std::size_t>(*value);
      }
      return;
    }
    const auto fields = split(line, '\t');
    if (fields.size() != 3) throw ParseError(source, line_no, "expected n<TAB>gram<TAB>count");
    const auto n = parse_int<std::size_t>(fields[0]);
    const auto c = parse_int<std::uint64_t>(fields[2]);
    const auto tokens = split_whitespace(fields[1]);
    if (!n || *n < 1 || *n > kMaxOrder || tokens.size() != *n) {
      throw ParseError(source, line_no, "bad n-gram order");
    }
    if (!c || *c == 0) throw ParseError(source, line_no, "count must be positive");
    Key key;
    key.fill(kNoWord);
    for (std::size_t i = 0; i < *n; ++i) key[i] = index.intern(std::string(tokens[i]));
    index.tables_[*n - 1][key] = *c;
    highest = std::max(highest, *n);
  });
  if (!have_total || index.total_tokens_ == 0) throw ParseError(source, 0, "missing #N= header");
  if (index.max_order_ == 0) index.max_order_ = std::max<std::size_t>(highest, 2);
  if (index.max_order_ > kMaxOrder) throw ParseError(source, 0, "max_n exceeds 5");
  return index;
}

}  // namespace mwe
