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

#include "mwe/gold_store.hpp"

#include <chrono>
#include <ctime>

#include "mwe/error.hpp"
#include "mwe/text_io.hpp"
#include "mwe/unicode.hpp"

namespace mwe {

std::string_view to_string(Verdict verdict) {
  return verdict == Verdict::Accepted ? "ACCEPTED" : "REJECTED";
}

std::optional<Verdict> parse_verdict(std::string_view name) {
  if (name == "ACCEPTED") return Verdict::Accepted;
  if (name == "REJECTED") return Verdict::Rejected;
  return std::nullopt;
}

std::string_view to_string(GoldSource source) {
  return source == GoldSource::FalseNegative ? "FALSE_NEGATIVE" : "RANKED_LIST";
}

std::optional<GoldSource> parse_gold_source(std::string_view name) {
  if (name == "RANKED_LIST") return GoldSource::RankedList;
  if (name == "FALSE_NEGATIVE") return GoldSource::FalseNegative;
  return std::nullopt;
}

nlohmann::json to_json(const GoldEntry& e) {
  nlohmann::json j;
  j["grams"] = e.grams;
  j["category"] = std::string(to_string(e.category));
  j["verdict"] = std::string(to_string(e.verdict));
  if (e.meaning) j["meaning"] = *e.meaning;
  j["added_by"] = e.added_by;
  j["timestamp"] = e.timestamp;
  j["source"] = std::string(to_string(e.source));
  return j;
}

GoldEntry gold_entry_from_json(const nlohmann::json& j, std::string_view source_name, std::size_t line) {
  const std::string source(source_name);
  auto fail = [&](const std::string& what) -> ParseError { return ParseError(source, line, what); };
  if (!j.is_object()) throw fail("gold entry must be a JSON object");
  auto text_field = [&](const char* key) -> std::string {
    if (!j.contains(key) || !j[key].is_string()) throw fail(std::string("missing string field '") + key + "'");
    return j[key].get<std::string>();
  };

  GoldEntry e;
  if (!j.contains("grams") || !j["grams"].is_array() || j["grams"].empty()) {
    throw fail("'grams' must be a non-empty array");
  }
  for (const auto& g : j["grams"]) {
    if (!g.is_string() || g.get<std::string>().empty()) throw fail("grams must be non-empty strings");
    e.grams.push_back(text::nfc(g.get<std::string>()));
  }
  const auto category = parse_category(text_field("category"));
  if (!category) throw fail("unknown category");
  e.category = *category;
  const auto verdict = parse_verdict(text_field("verdict"));
  if (!verdict) throw fail("verdict must be ACCEPTED or REJECTED");
  e.verdict = *verdict;
  if (j.contains("meaning") && !j["meaning"].is_null()) {
    if (!j["meaning"].is_string()) throw fail("'meaning' must be a string");
    e.meaning = j["meaning"].get<std::string>();
  }
  e.added_by = text_field("added_by");
  e.timestamp = text_field("timestamp");
  const auto src = parse_gold_source(text_field("source"));
  if (!src) throw fail("source must be RANKED_LIST or FALSE_NEGATIVE");
  e.source = *src;
  if (e.source == GoldSource::FalseNegative && e.verdict != Verdict::Accepted) {
    throw fail("FALSE_NEGATIVE entries must be ACCEPTED");
  }
  return e;
}

GoldStore GoldStore::parse(std::string_view text, std::string_view source_name) {
  GoldStore store;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (trim(line).empty()) return;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string(source_name), line_no, e.what());
    }
    store.put(gold_entry_from_json(j, source_name, line_no));
  });
  return store;
}

GoldStore GoldStore::load(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) return {};
  return parse(read_file(path), path.string());
}

std::string GoldStore::export_jsonl() const {
  std::string out;
  for (const auto& [key, entry] : entries_) {
    out += to_json(entry).dump();
    out += '\n';
  }
  return out;
}

void GoldStore::save(const std::filesystem::path& path) const { write_file(path, export_jsonl()); }

const GoldEntry* GoldStore::find(const Gram& grams, Category category) const {
  auto it = entries_.find({grams, category});
  return it == entries_.end() ? nullptr : &it->second;
}

void GoldStore::put(GoldEntry entry) {
  Key key{entry.grams, entry.category};
  entries_.insert_or_assign(std::move(key), std::move(entry));
}

std::string utc_timestamp_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace mwe
