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

// Naive re-implementation of counting and the three association measures.
// Deliberately shares nothing with the library: counts come from window
// scans, cells from per-position context checks, arithmetic in long double.

#ifndef MWE_TESTS_ORACLE_BRUTE_FORCE_HPP_
#define MWE_TESTS_ORACLE_BRUTE_FORCE_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Sentence = std::vector<std::string>;
using Corpus = std::vector<Sentence>;
using Gram = std::vector<std::string>;

inline std::uint64_t total_tokens(const Corpus& corpus) {
  std::uint64_t n = 0;
  for (const auto& s : corpus) n += s.size();
  return n;
}

inline std::uint64_t count(const Corpus& corpus, const Gram& gram) {
  std::uint64_t hits = 0;
  for (const auto& s : corpus) {
    if (s.size() < gram.size()) continue;
    for (std::size_t i = 0; i + gram.size() <= s.size(); ++i) {
      if (std::equal(gram.begin(), gram.end(), s.begin() + static_cast<std::ptrdiff_t>(i))) ++hits;
    }
  }
  return hits;
}

inline std::set<Gram> grams(const Corpus& corpus, std::size_t n) {
  std::set<Gram> out;
  for (const auto& s : corpus) {
    for (std::size_t i = 0; i + n <= s.size(); ++i) {
      out.emplace(s.begin() + static_cast<std::ptrdiff_t>(i), s.begin() + static_cast<std::ptrdiff_t>(i + n));
    }
  }
  return out;
}

inline Gram prefix(const Gram& g) { return Gram(g.begin(), g.end() - 1); }
inline Gram suffix(const Gram& g) { return Gram(g.begin() + 1, g.end()); }

/// Window counts gathered once by enumerating every span of every sentence.
struct Model {
  Corpus corpus;
  std::uint64_t n = 0;
  std::map<Gram, std::uint64_t> counts;

  explicit Model(Corpus c) : corpus(std::move(c)), n(total_tokens(corpus)) {
    for (const auto& s : corpus) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t len = 1; len <= 5 && i + len <= s.size(); ++len) {
          ++counts[Gram(s.begin() + static_cast<std::ptrdiff_t>(i), s.begin() + static_cast<std::ptrdiff_t>(i + len))];
        }
      }
    }
  }

  std::uint64_t count(const Gram& g) const {
    auto it = counts.find(g);
    return it == counts.end() ? 0 : it->second;
  }
};

inline double npmi(const Model& m, const Gram& g) {
  const long double N = static_cast<long double>(m.n);
  const long double p = m.count(g) / N;
  const long double pl = m.count(prefix(g)) / N;
  const long double pr = m.count(suffix(g)) / N;
  return static_cast<double>(std::log2(p * p / (pl * pr)));
}

inline double dice(const Model& m, const Gram& g) {
  return static_cast<double>(static_cast<long double>(m.count(g)) /
                             static_cast<long double>(m.count(prefix(g)) + m.count(suffix(g))));
}

struct Cells {
  std::uint64_t k1 = 0, n1 = 0, k2 = 0, n2 = 0;
  bool operator==(const Cells&) const = default;
};

// Walk every occurrence of the end word and ask whether the rest of the gram
// sits next to it.
inline Cells cells(const Model& m, const Gram& g, bool forward) {
  const std::size_t n = g.size();
  const Gram context = forward ? prefix(g) : suffix(g);
  const std::string& target = forward ? g.back() : g.front();
  Cells c;
  for (const auto& s : m.corpus) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != target) continue;
      bool adjacent = false;
      if (forward && i + 1 >= n) {
        adjacent = std::equal(context.begin(), context.end(), s.begin() + static_cast<std::ptrdiff_t>(i + 1 - n));
      } else if (!forward && i + n <= s.size()) {
        adjacent = std::equal(context.begin(), context.end(), s.begin() + static_cast<std::ptrdiff_t>(i + 1));
      }
      ++(adjacent ? c.k1 : c.k2);
    }
  }
  c.n1 = m.count(context);
  c.n2 = m.n - c.n1;
  return c;
}

inline long double loglik(std::uint64_t k, std::uint64_t n, long double p) {
  long double t = 0;
  if (k > 0) t += k * std::log2(p);
  if (n > k) t += (n - k) * std::log2(1 - p);
  return t;
}

inline std::optional<long double> llr(const Cells& c) {
  if (c.n1 == 0 || c.n2 == 0 || c.k1 > c.n1 || c.k2 > c.n2) return std::nullopt;
  const long double p = static_cast<long double>(c.k1 + c.k2) / (c.n1 + c.n2);
  const long double p1 = static_cast<long double>(c.k1) / c.n1;
  const long double p2 = static_cast<long double>(c.k2) / c.n2;
  return loglik(c.k1, c.n1, p) + loglik(c.k2, c.n2, p) - loglik(c.k1, c.n1, p1) - loglik(c.k2, c.n2, p2);
}

/// Empty when either direction has an empty or over-full cell.
inline std::optional<double> bllr(const Model& m, const Gram& g) {
  auto f = llr(cells(m, g, true));
  auto b = llr(cells(m, g, false));
  if (!f || !b) return std::nullopt;
  return static_cast<double>((*f + *b) / 2);
}

struct Row {
  Gram gram;
  double npmi = 0, bllr = 0, dice = 0, weight = 1;
  std::uint64_t count = 0;
  double combined = 0;
};

/// Normalise each measure over `rows`, sum, sort best first.
inline std::vector<Row> fuse(std::vector<Row> rows) {
  if (rows.empty()) return rows;
  long double lo = rows[0].npmi, hi = rows[0].npmi, bmax = 0, dmax = 0;
  for (const auto& r : rows) {
    lo = std::min<long double>(lo, r.npmi);
    hi = std::max<long double>(hi, r.npmi);
    bmax = std::max<long double>(bmax, -r.bllr);
    dmax = std::max<long double>(dmax, r.dice);
  }
  for (auto& r : rows) {
    const long double a = hi == lo ? 1 : (r.npmi - lo) / (hi - lo);
    const long double b = bmax == 0 ? 1 : -r.bllr / bmax;
    const long double d = dmax == 0 ? 1 : r.dice / dmax;
    r.combined = static_cast<double>((a + b + d) * r.weight);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& x, const Row& y) {
    if (x.combined != y.combined) return x.combined > y.combined;
    if (x.count != y.count) return x.count > y.count;
    return x.gram < y.gram;
  });
  return rows;
}

}  // namespace oracle

#endif  // MWE_TESTS_ORACLE_BRUTE_FORCE_HPP_
