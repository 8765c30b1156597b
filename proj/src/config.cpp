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

#include "mwe/config.hpp"

#include "mwe/error.hpp"
#include "mwe/text_io.hpp"

namespace mwe {

KeyValueConfig KeyValueConfig::parse(std::string_view text, std::string_view source_name) {
  KeyValueConfig cfg;
  cfg.source_ = std::string(source_name);
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    line = trim(line);
    if (line.empty() || line.front() == '#') return;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(cfg.source_, line_no, "expected key=value");
    const auto key = trim(line.substr(0, eq));
    if (key.empty()) throw ParseError(cfg.source_, line_no, "empty key");
    cfg.values_[std::string(key)] = std::string(trim(line.substr(eq + 1)));
  });
  return cfg;
}

KeyValueConfig KeyValueConfig::load(const std::filesystem::path& path) {
  return parse(read_file(path), path.string());
}

std::optional<std::string> KeyValueConfig::get(std::string_view key) const {
  auto it = values_.find(std::string(key));
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

std::string KeyValueConfig::get_string(std::string_view key, std::string fallback) const {
  auto v = get(key);
  return v ? *v : std::move(fallback);
}

double KeyValueConfig::get_double(std::string_view key, double fallback) const {
  auto v = get(key);
  if (!v) return fallback;
  auto parsed = parse_double(*v);
  if (!parsed) throw ParseError(source_, 0, std::string(key) + ": expected a number, got '" + *v + "'");
  return *parsed;
}

std::int64_t KeyValueConfig::get_int(std::string_view key, std::int64_t fallback) const {
  auto v = get(key);
  if (!v) return fallback;
  auto parsed = parse_int<std::int64_t>(*v);
  if (!parsed) throw ParseError(source_, 0, std::string(key) + ": expected an integer, got '" + *v + "'");
  return *parsed;
}

bool KeyValueConfig::get_bool(std::string_view key, bool fallback) const {
  auto v = get(key);
  if (!v) return fallback;
  if (*v == "true" || *v == "1" || *v == "yes" || *v == "on") return true;
  if (*v == "false" || *v == "0" || *v == "no" || *v == "off") return false;
  throw ParseError(source_, 0, std::string(key) + ": expected a boolean, got '" + *v + "'");
}

}  // namespace mwe
