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

#ifndef MWE_GOLD_STORE_HPP_
#define MWE_GOLD_STORE_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "mwe/candidates.hpp"

namespace mwe {

enum class Verdict { Accepted, Rejected };
enum class GoldSource { RankedList, FalseNegative };

std::string_view to_string(Verdict verdict);
std::optional<Verdict> parse_verdict(std::string_view name);
std::string_view to_string(GoldSource source);
std::optional<GoldSource> parse_gold_source(std::string_view name);

struct GoldEntry {
  Gram grams;
  Category category = Category::Collocation;
  Verdict verdict = Verdict::Accepted;
  std::optional<std::string> meaning;
  std::string added_by;
  std::string timestamp;  // ISO-8601, UTC
  GoldSource source = GoldSource::RankedList;

  bool operator==(const GoldEntry&) const = default;
};

nlohmann::json to_json(const GoldEntry& entry);

/// Throws ParseError on missing fields, unknown enum names, or a
/// FALSE_NEGATIVE entry that is not ACCEPTED.
GoldEntry gold_entry_from_json(const nlohmann::json& j, std::string_view source_name = "<gold>",
                               std::size_t line = 0);

/// Lexicographer verdicts keyed by (grams, category). The on-disk form is
/// JSON Lines; loading keeps the last line for each key, so appends act as
/// upserts and a load/export cycle compacts the file.
class GoldStore {
 public:
  using Key = std::pair<Gram, Category>;

  static GoldStore load(const std::filesystem::path& path);  // missing file: empty store
  static GoldStore parse(std::string_view text, std::string_view source_name = "<gold>");

  /// Compacted JSON Lines sorted by key.
  std::string export_jsonl() const;
  void save(const std::filesystem::path& path) const;

  const GoldEntry* find(const Gram& grams, Category category) const;
  void put(GoldEntry entry);

  std::size_t size() const { return entries_.size(); }
  const std::map<Key, GoldEntry>& entries() const { return entries_; }

 private:
  std::map<Key, GoldEntry> entries_;
};

/// "YYYY-MM-DDTHH:MM:SSZ" for the current UTC time.
std::string utc_timestamp_now();

}  // namespace mwe

#endif  // MWE_GOLD_STORE_HPP_
