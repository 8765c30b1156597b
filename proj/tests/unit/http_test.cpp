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

#include <gtest/gtest.h>

#include <httplib.h>

#include "mwe/pipeline.hpp"
#include "mwe/service.hpp"
#include "test_support.hpp"

namespace {

using nlohmann::json;

class Http : public ::testing::Test {
 protected:
  void SetUp() override {
    gold_ = std::filesystem::temp_directory_path() / "mwex_http_gold.jsonl";
    std::filesystem::remove(gold_);
    auto ranked = mwe::run_pipeline(mwe::PipelineConfig::load(testing_support::sample("sample.conf"))).ranked;
    service_ = std::make_unique<mwe::ReviewService>(
        std::move(ranked), mwe::Lexicon::load(testing_support::fixture("hindi_lexicon.tsv")), mwe::GoldStore{},
        gold_);
    server_ = std::make_unique<mwe::HttpServer>(*service_);
    port_ = server_->start("127.0.0.1", 0);
  }
  void TearDown() override {
    server_->stop();
    std::filesystem::remove(gold_);
  }

  httplib::Client client() const { return httplib::Client("127.0.0.1", port_); }

  std::filesystem::path gold_;
  std::unique_ptr<mwe::ReviewService> service_;
  std::unique_ptr<mwe::HttpServer> server_;
  int port_ = 0;
};

TEST_F(Http, EndToEnd) {
  auto cli = client();
  auto res = cli.Get("/candidates?limit=0");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);

  res = cli.Get("/candidates?limit=3&category=COMPOUND_NOUN");
  ASSERT_TRUE(res);
  ASSERT_EQ(res->status, 200);
  EXPECT_NE(res->get_header_value("Content-Type").find("application/json"), std::string::npos);
  const auto page = json::parse(res->body);
  ASSERT_FALSE(page["items"].empty());
  const auto first = page["items"][0];

  const json verdict = {{"grams", first["grams"]}, {"category", first["category"]}, {"verdict", "ACCEPTED"},
                        {"meaning", "a place where buses halt"}};
  res = cli.Post("/verdict", verdict.dump(), "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 201);
  res = cli.Post("/verdict", verdict.dump(), "application/json");
  EXPECT_EQ(res->status, 200);

  json other = verdict;
  other["verdict"] = "REJECTED";
  other["session"] = "bob";
  res = cli.Post("/verdict", other.dump(), "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 409);
  EXPECT_EQ(json::parse(res->body)["existing"]["verdict"], "ACCEPTED");

  res = cli.Get("/gold/export");
  ASSERT_TRUE(res);
  const auto gold = json::parse(res->body);
  ASSERT_EQ(gold["entries"].size(), 1u);
  EXPECT_FALSE(gold["entries"][0]["timestamp"].get<std::string>().empty());

  res = cli.Get("/lemmatize?word=%E0%A4%98%E0%A5%81%E0%A4%AE%E0%A4%A4%E0%A5%87&level=0");  // घुमते
  ASSERT_TRUE(res);
  ASSERT_EQ(res->status, 200);
  const auto lemma = json::parse(res->body);
  EXPECT_EQ(lemma["stem"], "घुम");
  EXPECT_EQ(lemma["lemmas"][0], "घुमना");

  res = cli.Post("/verdict", "garbage", "application/json");
  EXPECT_EQ(res->status, 400);
  res = cli.Get("/stats");
  EXPECT_EQ(res->status, 200);
  res = cli.Get("/missing");
  EXPECT_EQ(res->status, 404);
}

}  // namespace
