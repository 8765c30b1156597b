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

#include "mwe/service.hpp"

#include <cstdio>
#include <fstream>
#include <mutex>

#include "mwe/error.hpp"
#include "mwe/pipeline.hpp"
#include "mwe/text_io.hpp"
#include "mwe/unicode.hpp"

namespace mwe {

namespace {

constexpr std::size_t kDefaultPage = 50;
constexpr std::size_t kMaxPage = 1000;

Response error(int status, const std::string& message) {
  return {status, nlohmann::json{{"error", message}}};
}

nlohmann::json optional_json(const std::optional<double>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

// Value of the first provenance tag starting with `prefix`, without it.
nlohmann::json tagged(const Candidate& c, std::string_view prefix) {
  for (const auto& p : c.provenance) {
    if (p.starts_with(prefix)) return p.substr(prefix.size());
  }
  return nullptr;
}

struct VerdictBody {
  Gram grams;
  Category category = Category::Collocation;
  Verdict verdict = Verdict::Accepted;
  std::optional<std::string> meaning;
  std::string session = "anonymous";
};

// Throws Error with a client-facing message on malformed input.
VerdictBody parse_verdict_body(const std::string& body, bool needs_verdict) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(body);
  } catch (const nlohmann::json::parse_error&) {
    throw Error("body is not valid JSON");
  }
  if (!j.is_object()) throw Error("body must be a JSON object");
  VerdictBody v;
  if (!j.contains("grams") || !j["grams"].is_array() || j["grams"].empty()) {
    throw Error("'grams' must be a non-empty array of strings");
  }
  for (const auto& g : j["grams"]) {
    if (!g.is_string()) throw Error("'grams' must be a non-empty array of strings");
    auto s = g.get<std::string>();
    if (s.empty() || !text::is_valid_utf8(s)) throw Error("grams must be non-empty UTF-8 strings");
    v.grams.push_back(text::nfc(s));
  }
  if (!j.contains("category") || !j["category"].is_string()) throw Error("'category' is required");
  auto category = parse_category(j["category"].get<std::string>());
  if (!category) throw Error("unknown category");
  v.category = *category;
  if (needs_verdict) {
    if (!j.contains("verdict") || !j["verdict"].is_string()) throw Error("'verdict' is required");
    auto verdict = parse_verdict(j["verdict"].get<std::string>());
    if (!verdict) throw Error("verdict must be ACCEPTED or REJECTED");
    v.verdict = *verdict;
  }
  if (j.contains("meaning") && !j["meaning"].is_null()) {
    if (!j["meaning"].is_string()) throw Error("'meaning' must be a string");
    v.meaning = j["meaning"].get<std::string>();
  }
  if (j.contains("session")) {
    if (!j["session"].is_string() || j["session"].get<std::string>().empty()) {
      throw Error("'session' must be a non-empty string");
    }
    v.session = j["session"].get<std::string>();
  }
  return v;
}

std::optional<std::size_t> parse_size(const std::map<std::string, std::string>& q, const std::string& key,
                                      std::size_t fallback, bool& bad) {
  auto it = q.find(key);
  if (it == q.end()) return fallback;
  auto v = parse_int<std::size_t>(it->second);
  if (!v) bad = true;
  return v;
}

}  // namespace

std::string compute_run_id(const RankedList& ranked) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : format_ranked_tsv(ranked)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ReviewService::ReviewService(RankedList ranked, Lexicon lexicon, GoldStore gold, std::filesystem::path gold_path,
                             Clock clock)
    : lexicon_(std::move(lexicon)),
      gold_(std::move(gold)),
      gold_path_(std::move(gold_path)),
      clock_(std::move(clock)),
      run_id_(compute_run_id(ranked)) {
  fused_ = ranked.ranked.size();
  rows_ = std::move(ranked.ranked);
  for (auto& e : ranked.unscored) rows_.push_back(std::move(e));
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    by_key_.emplace(GoldStore::Key{rows_[i].candidate.grams, rows_[i].candidate.category}, i);
  }
}

GoldStore ReviewService::gold_snapshot() const {
  std::shared_lock lock(mutex_);
  return gold_;
}

Response ReviewService::handle(const Request& r) {
  struct Route {
    const char* path;
    const char* method;
  };
  static constexpr Route kRoutes[] = {
      {"/candidates", "GET"}, {"/verdict", "POST"}, {"/false-negative", "POST"},
      {"/gold/export", "GET"}, {"/lemmatize", "GET"}, {"/stats", "GET"},
  };
  bool known = false;
  for (const auto& route : kRoutes) {
    if (r.path != route.path) continue;
    known = true;
    if (r.method != route.method) return error(405, "method not allowed");
  }
  if (!known) return error(404, "no such endpoint");

  try {
    if (r.path == "/candidates") return list_candidates(r);
    if (r.path == "/verdict") return post_verdict(r, GoldSource::RankedList);
    if (r.path == "/false-negative") return post_verdict(r, GoldSource::FalseNegative);
    if (r.path == "/gold/export") return export_gold();
    if (r.path == "/lemmatize") return lemmatize(r);
    return stats();
  } catch (const IoError& e) {
    return error(500, e.what());
  }
}

nlohmann::json ReviewService::entry_json(const RankedEntry& e, std::size_t rank) const {
  const auto& c = e.candidate;
  nlohmann::json j;
  j["rank"] = rank;
  j["grams"] = c.grams;
  j["category"] = std::string(to_string(c.category));
  j["count"] = e.count;
  j["weight"] = c.weight;
  j["scored"] = rank <= fused_;
  nlohmann::json scores;
  scores["npmi"] = optional_json(e.scores.npmi);
  scores["bllr"] = optional_json(e.scores.bllr);
  scores["dice"] = optional_json(e.scores.dice);
  if (rank <= fused_) {
    scores["norm_npmi"] = e.scores.norm_npmi;
    scores["norm_bllr"] = e.scores.norm_bllr;
    scores["norm_dice"] = e.scores.norm_dice;
    scores["combined"] = e.scores.combined;
  } else {
    scores["combined"] = nullptr;
    scores["reason"] = e.unscored_reason;
  }
  j["scores"] = std::move(scores);
  j["provenance"] = nlohmann::json(std::vector<std::string>(c.provenance.begin(), c.provenance.end()));
  j["semantic"] = tagged(c, "SEMANTIC:");
  j["reduplication"] = tagged(c, "REDUP:");
  if (const auto* g = gold_.find(c.grams, c.category)) {
    j["gold"] = to_json(*g);
  } else {
    j["gold"] = nullptr;
  }
  return j;
}

Response ReviewService::list_candidates(const Request& r) const {
  bool bad = false;
  auto offset = parse_size(r.query, "offset", 0, bad);
  auto limit = parse_size(r.query, "limit", kDefaultPage, bad);
  if (bad) return error(400, "offset and limit must be non-negative integers");
  if (*limit == 0 || *limit > kMaxPage) return error(400, "limit must be between 1 and 1000");

  std::optional<Category> category;
  if (auto it = r.query.find("category"); it != r.query.end() && !it->second.empty()) {
    category = parse_category(it->second);
    if (!category) return error(400, "unknown category");
  }
  std::optional<double> min_score;
  if (auto it = r.query.find("minScore"); it != r.query.end() && !it->second.empty()) {
    min_score = parse_double(it->second);
    if (!min_score) return error(400, "minScore must be a number");
  }

  std::shared_lock lock(mutex_);
  nlohmann::json items = nlohmann::json::array();
  std::size_t total = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const auto& e = rows_[i];
    if (category && e.candidate.category != *category) continue;
    if (min_score && (i >= fused_ || e.scores.combined < *min_score)) continue;
    if (total >= *offset && items.size() < *limit) items.push_back(entry_json(e, i + 1));
    ++total;
  }
  return {200, nlohmann::json{{"run_id", run_id_}, {"total", total}, {"offset", *offset},
                              {"limit", *limit}, {"items", std::move(items)}}};
}

Response ReviewService::post_verdict(const Request& r, GoldSource source) {
  VerdictBody v;
  try {
    v = parse_verdict_body(r.body, source == GoldSource::RankedList);
  } catch (const Error& e) {
    return error(400, e.what());
  }
  if (source == GoldSource::FalseNegative) v.verdict = Verdict::Accepted;
  if (source == GoldSource::RankedList && !by_key_.contains({v.grams, v.category})) {
    return error(404, "no such candidate in this run");
  }

  std::unique_lock lock(mutex_);
  const GoldEntry* existing = gold_.find(v.grams, v.category);
  if (existing && existing->verdict == v.verdict &&
      (!v.meaning || existing->meaning == v.meaning)) {
    return {200, nlohmann::json{{"status", "unchanged"}, {"entry", to_json(*existing)}}};
  }
  if (existing && existing->verdict != v.verdict && existing->added_by != v.session) {
    GoldEntry requested = *existing;
    requested.verdict = v.verdict;
    requested.added_by = v.session;
    requested.meaning = v.meaning ? v.meaning : existing->meaning;
    requested.source = source;
    return {409, nlohmann::json{{"error", "conflicting verdict from another session"},
                                {"existing", to_json(*existing)},
                                {"requested", to_json(requested)}}};
  }

  GoldEntry entry;
  entry.grams = v.grams;
  entry.category = v.category;
  entry.verdict = v.verdict;
  entry.meaning = v.meaning ? v.meaning : (existing ? existing->meaning : std::nullopt);
  entry.added_by = v.session;
  entry.timestamp = clock_();
  entry.source = existing && existing->source == GoldSource::FalseNegative ? GoldSource::FalseNegative : source;
  if (entry.source == GoldSource::FalseNegative) entry.verdict = Verdict::Accepted;

  if (!gold_path_.empty()) {
    std::ofstream out(gold_path_, std::ios::binary | std::ios::app);
    if (!out) throw IoError("cannot append to gold store " + gold_path_.string());
    out << to_json(entry).dump() << '\n';
    if (!out.flush()) throw IoError("write failed for gold store " + gold_path_.string());
  }
  const bool created = existing == nullptr;
  gold_.put(entry);
  return {created ? 201 : 200,
          nlohmann::json{{"status", created ? "created" : "updated"}, {"entry", to_json(entry)}}};
}

Response ReviewService::export_gold() const {
  std::shared_lock lock(mutex_);
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [key, e] : gold_.entries()) entries.push_back(to_json(e));
  return {200, nlohmann::json{{"run_id", run_id_}, {"count", gold_.size()}, {"entries", std::move(entries)}}};
}

Response ReviewService::lemmatize(const Request& r) const {
  auto it = r.query.find("word");
  if (it == r.query.end() || it->second.empty()) return error(400, "'word' is required");
  if (!text::is_valid_utf8(it->second)) return error(400, "'word' must be UTF-8");
  std::size_t level = 0;
  if (auto l = r.query.find("level"); l != r.query.end()) {
    auto v = parse_int<std::size_t>(l->second);
    if (!v) return error(400, "level must be a non-negative integer");
    level = *v;
  }
  const auto s = lexicon_.lemmatize(it->second, level);
  return {200, nlohmann::json{{"word", text::nfc(it->second)}, {"level", level}, {"stem", s.stem},
                              {"lemmas", s.lemmas}, {"match_depth", s.match_depth}}};
}

Response ReviewService::stats() const {
  std::shared_lock lock(mutex_);
  nlohmann::json per_category = nlohmann::json::object();
  std::size_t judged = 0;
  for (const auto& e : rows_) {
    auto& slot = per_category[std::string(to_string(e.candidate.category))];
    slot = slot.is_null() ? 1 : slot.get<std::size_t>() + 1;
    if (gold_.find(e.candidate.grams, e.candidate.category)) ++judged;
  }
  std::size_t accepted = 0;
  for (const auto& [key, g] : gold_.entries()) accepted += g.verdict == Verdict::Accepted;
  return {200, nlohmann::json{{"run_id", run_id_},
                              {"candidates", rows_.size()},
                              {"scored", fused_},
                              {"unscored", rows_.size() - fused_},
                              {"per_category", std::move(per_category)},
                              {"judged", judged},
                              {"gold_entries", gold_.size()},
                              {"gold_accepted", accepted}}};
}

}  // namespace mwe
