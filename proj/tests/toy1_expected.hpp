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

// Reference values for TOY-1, printed by tests/oracle/toy1_oracle.py and
// frozen here. Do not regenerate from the engine.

#ifndef MWE_TESTS_TOY1_EXPECTED_HPP_
#define MWE_TESTS_TOY1_EXPECTED_HPP_

#include <cstdint>
#include <string_view>

namespace toy1 {

inline constexpr std::string_view kCorpus =
    "a_NN b_NN c_VB\n"
    "a_NN b_NN d_VB\n"
    "a_NN c_VB b_NN\n";

inline constexpr std::uint64_t kTotalTokens = 9;

struct Count {
  std::string_view gram;  // space-joined
  std::uint64_t count;
};

// Every observed n-gram; anything absent has count 0.
inline constexpr Count kCounts[] = {
    {"a", 3}, {"b", 3}, {"c", 2}, {"d", 1},
    {"a b", 2}, {"a c", 1}, {"b c", 1}, {"b d", 1}, {"c b", 1},
    {"a b c", 1}, {"a b d", 1}, {"a c b", 1},
};

struct Scores {
  std::string_view gram;
  double npmi;
  double bllr;
  double dice;
  // forward then backward cells: k1, n1, k2, n2
  std::uint64_t fwd[4];
  std::uint64_t bwd[4];
};

inline constexpr Scores kScores[] = {
    {"a b", -1.1699250014423124, -1.6096404744368122, 0.3333333333333333, {2, 3, 1, 6}, {2, 3, 1, 6}},
    {"a c", -2.584962500721156, -0.22281852652398904, 0.2, {1, 3, 1, 6}, {1, 2, 2, 7}},
    {"b c", -2.584962500721156, -0.22281852652398904, 0.2, {1, 3, 1, 6}, {1, 2, 2, 7}},
    {"b d", -1.5849625007211563, -1.7744375108173434, 0.25, {1, 3, 0, 6}, {1, 1, 2, 8}},
    {"c b", -2.584962500721156, -0.22281852652398904, 0.2, {1, 2, 2, 7}, {1, 3, 1, 6}},
    {"a b c", -1.0, -1.2552843096593174, 0.3333333333333333, {1, 2, 1, 7}, {1, 1, 2, 8}},
    {"a b d", -1.0, -2.1518812618990784, 0.3333333333333333, {1, 2, 0, 7}, {1, 1, 2, 8}},
    {"a c b", 0.0, -1.7744375108173438, 0.5, {1, 1, 2, 8}, {1, 1, 2, 8}},
};

struct Fused {
  std::string_view gram;
  double combined;
};

// All observed bigrams fused together (ties fall back to gram order).
inline constexpr Fused kBigramRanking[] = {
    {"a b", 2.9071271682570425}, {"b d", 2.4566950526114235}, {"a c", 0.7255713572135625},
    {"b c", 0.7255713572135625}, {"c b", 0.7255713572135625},
};

// All observed 2- and 3-grams fused together.
inline constexpr Fused kAllRanking[] = {
    {"a c b", 2.8245982444455913}, {"a b d", 2.279813859432125}, {"a b", 1.9620933660384905},
    {"a b c", 1.863156598590281},  {"b d", 1.7114510516801327},  {"a c", 0.5035459207109537},
    {"b c", 0.5035459207109537},   {"c b", 0.5035459207109537},
};

}  // namespace toy1

#endif  // MWE_TESTS_TOY1_EXPECTED_HPP_
