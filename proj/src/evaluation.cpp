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

#include "mwe/evaluation.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "mwe/error.hpp"
#include "mwe/text_io.hpp"

namespace mwe {

namespace {

void tally(PrecisionCell& cell, std::optional<Verdict> verdict) {
  if (!verdict) {
    ++cell.unjudged;
    return;
  }
  ++cell.hits;
  if (*verdict == Verdict::Accepted) ++cell.correct;
}

// Larger is better for every measure except raw BLLR, where more negative
// means stronger association.
std::optional<double> strength(const RankedRow& row, Measure m) {
  switch (m) {
    case Measure::Combined: return row.combined;
    case Measure::Npmi: return row.npmi;
    case Measure::Bllr: return row.bllr ? std::optional<double>(-*row.bllr) : std::nullopt;
    case Measure::Dice: return row.dice;
  }
  return std::nullopt;
}

std::string precision_text(const PrecisionCell& cell) {
  auto p = cell.precision();
  if (!p) return "undefined";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f%%", *p * 100.0);
  return buf;
}

nlohmann::json cell_json(const PrecisionCell& c) {
  nlohmann::json j{{"hits", c.hits}, {"correct", c.correct}, {"unjudged", c.unjudged}};
  if (auto p = c.precision()) {
    j["precision"] = *p;
  } else {
    j["precision"] = nullptr;
  }
  return j;
}

}  // namespace

std::string_view to_string(Measure measure) {
  switch (measure) {
    case Measure::Combined: return "combined";
    case Measure::Npmi: return "npmi";
    case Measure::Bllr: return "bllr";
    case Measure::Dice: return "dice";
  }
  return "combined";
}

std::optional<Verdict> gold_verdict(const GoldStore& gold, const Gram& grams, Category category) {
  if (const auto* e = gold.find(grams, category)) return e->verdict;
  std::optional<Verdict> shared;
  for (const auto& [key, entry] : gold.entries()) {
    if (key.first != grams) continue;
    if (shared && *shared != entry.verdict) return std::nullopt;
    shared = entry.verdict;
  }
  return shared;
}

EvalReport evaluate(const std::vector<RankedRow>& rows, const GoldStore& gold, std::size_t k) {
  if (k == 0) throw Error("evaluation cut-off k must be positive");
  EvalReport report;
  report.k = k;

  std::vector<std::optional<Verdict>> verdicts;
  verdicts.reserve(rows.size());
  for (const auto& row : rows) verdicts.push_back(gold_verdict(gold, row.grams, row.category));

  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    tally(report.per_filter[row.category], verdicts[i]);
    if (row.category == Category::ConjunctVerb || row.category == Category::CompoundVerb) {
      tally(report.per_verb[{row.category, row.grams.back()}], verdicts[i]);
    }
  }

  for (Measure m : {Measure::Combined, Measure::Npmi, Measure::Bllr, Measure::Dice}) {
    for (std::size_t n = 2; n <= kMaxOrder; ++n) {
      std::vector<std::size_t> order;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].grams.size() == n && strength(rows[i], m)) order.push_back(i);
      }
      if (order.empty()) continue;
      std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const double sa = *strength(rows[a], m);
        const double sb = *strength(rows[b], m);
        if (sa != sb) return sa > sb;
        if (rows[a].count != rows[b].count) return rows[a].count > rows[b].count;
        return rows[a].grams < rows[b].grams;
      });
      if (order.size() > k) order.resize(k);
      PrecisionCell& cell = report.at_k[{m, n}];
      for (auto i : order) tally(cell, verdicts[i]);
    }
  }
  return report;
}

nlohmann::json to_json(const EvalReport& report) {
  nlohmann::json j;
  j["k"] = report.k;
  j["per_filter"] = nlohmann::json::object();
  for (const auto& [category, cell] : report.per_filter) {
    j["per_filter"][std::string(to_string(category))] = cell_json(cell);
  }
  j["per_verb"] = nlohmann::json::array();
  for (const auto& [key, cell] : report.per_verb) {
    auto c = cell_json(cell);
    c["category"] = std::string(to_string(key.first));
    c["verb"] = key.second;
    j["per_verb"].push_back(std::move(c));
  }
  j["precision_at_k"] = nlohmann::json::array();
  for (const auto& [key, cell] : report.at_k) {
    auto c = cell_json(cell);
    c["measure"] = std::string(to_string(key.first));
    c["n"] = key.second;
    j["precision_at_k"].push_back(std::move(c));
  }
  return j;
}

std::string format_report(const EvalReport& report) {
  std::ostringstream out;
  out << "# per filter\tcategory\thits\tcorrect\tprecision\tunjudged\n";
  for (const auto& [category, c] : report.per_filter) {
    out << "filter\t" << to_string(category) << '\t' << c.hits << '\t' << c.correct << '\t'
        << precision_text(c) << '\t' << c.unjudged << '\n';
  }
  out << "# per verb\tcategory:verb\thits\tcorrect\tprecision\tunjudged\n";
  for (const auto& [key, c] : report.per_verb) {
    out << "verb\t" << to_string(key.first) << ':' << key.second << '\t' << c.hits << '\t' << c.correct
        << '\t' << precision_text(c) << '\t' << c.unjudged << '\n';
  }
  out << "# precision@" << report.k << "\tmeasure:n\thits\tcorrect\tprecision\tunjudged\n";
  for (const auto& [key, c] : report.at_k) {
    out << "at_k\t" << to_string(key.first) << ':' << key.second << '\t' << c.hits << '\t' << c.correct
        << '\t' << precision_text(c) << '\t' << c.unjudged << '\n';
  }
  return out.str();
}

}  // namespace mwe
