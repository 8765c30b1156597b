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

#ifndef MWE_SERVICE_HPP_
#define MWE_SERVICE_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>

#include <json.hpp>

#include "mwe/association.hpp"
#include "mwe/gold_store.hpp"
#include "mwe/lexicon.hpp"

namespace mwe {

struct Request {
  std::string method;  // "GET", "POST"
  std::string path;
  std::map<std::string, std::string> query;
  std::string body;
};

struct Response {
  int status = 200;
  nlohmann::json body;
};

/// Review API over one finished run. Transport-free so it can be exercised
/// directly; see HttpServer for the HTTP binding.
///
/// Verdict writes go through a single writer lock and are appended to the
/// gold file (when one is set) before the call returns. A verdict that
/// contradicts an entry made by a different session is refused with 409;
/// repeating an identical verdict is a no-op.
class ReviewService {
 public:
  using Clock = std::function<std::string()>;

  ReviewService(RankedList ranked, Lexicon lexicon, GoldStore gold, std::filesystem::path gold_path = {},
                Clock clock = utc_timestamp_now);

  Response handle(const Request& request);

  const std::string& run_id() const { return run_id_; }
  GoldStore gold_snapshot() const;

 private:
  Response list_candidates(const Request& r) const;
  Response post_verdict(const Request& r, GoldSource source);
  Response export_gold() const;
  Response lemmatize(const Request& r) const;
  Response stats() const;

  nlohmann::json entry_json(const RankedEntry& e, std::size_t rank) const;

  std::vector<RankedEntry> rows_;  // fused first, then unscored
  std::size_t fused_ = 0;
  std::map<GoldStore::Key, std::size_t> by_key_;
  Lexicon lexicon_;
  GoldStore gold_;
  std::filesystem::path gold_path_;
  Clock clock_;
  std::string run_id_;
  mutable std::shared_mutex mutex_;
};

/// 16 hex digits of FNV-1a over the ranked TSV.
std::string compute_run_id(const RankedList& ranked);

/// Minimal HTTP front end for ReviewService.
class HttpServer {
 public:
  explicit HttpServer(ReviewService& service);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Binds and serves on a background thread; port 0 picks a free port.
  /// Returns the bound port. Throws Error when the bind fails.
  int start(const std::string& host, int port);
  /// Blocks until stop() is called from elsewhere.
  void listen(const std::string& host, int port);
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace mwe

#endif  // MWE_SERVICE_HPP_
