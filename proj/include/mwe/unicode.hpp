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

#ifndef MWE_UNICODE_HPP_
#define MWE_UNICODE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

// Thin UTF-8 helpers. Every string that enters the engine is NFC so that
// byte equality and scalar-wise comparison agree with canonical equivalence.
namespace mwe::text {

/// Byte offset of the first invalid sequence, or nullopt for valid UTF-8.
std::optional<std::size_t> find_invalid_utf8(std::string_view s);

inline bool is_valid_utf8(std::string_view s) { return !find_invalid_utf8(s); }

/// NFC form of valid UTF-8 input.
std::string nfc(std::string_view s);

/// Unicode default case folding (used only for reduplication matching).
std::string fold_case(std::string_view s);

std::u32string to_scalars(std::string_view s);
std::string from_scalars(std::u32string_view s);

std::size_t scalar_length(std::string_view s);

/// Length in scalars of the longest common suffix.
std::size_t common_suffix_length(std::u32string_view a, std::u32string_view b);

}  // namespace mwe::text

#endif  // MWE_UNICODE_HPP_
