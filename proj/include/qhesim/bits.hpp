// Copyright 2026 The qhesim Authors
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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qhesim {

// A classical bit string; every element is 0 or 1.
using Bits = std::vector<std::uint8_t>;

// "0110"-style rendering. Empty vector renders as "".
std::string bits_to_string(const Bits& bits);

// Parses a binary string; throws std::invalid_argument on any non-0/1 char.
Bits parse_bits(std::string_view text);

// Bitwise XOR of equal-length strings; throws on length mismatch.
Bits xor_bits(const Bits& a, const Bits& b);

// Interprets bits as a big-endian integer (first bit most significant).
std::uint64_t bits_to_index(const Bits& bits);

// Inverse of bits_to_index for a fixed width.
Bits index_to_bits(std::uint64_t index, int width);

}  // namespace qhesim
