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

#include "qhesim/bits.hpp"

#include <stdexcept>

namespace qhesim {

std::string bits_to_string(const Bits& bits) {
  std::string out;
  out.reserve(bits.size());
  for (auto b : bits) out.push_back(b ? '1' : '0');
  return out;
}

Bits parse_bits(std::string_view text) {
  Bits out;
  out.reserve(text.size());
  for (char ch : text) {
    if (ch != '0' && ch != '1')
      throw std::invalid_argument("bit string may contain only 0 and 1, got '" +
                                  std::string(text) + "'");
    out.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return out;
}

Bits xor_bits(const Bits& a, const Bits& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("bit-string length mismatch: " +
                                std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()));
  Bits out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] ^ b[i];
  return out;
}

std::uint64_t bits_to_index(const Bits& bits) {
  std::uint64_t idx = 0;
  for (auto b : bits) idx = (idx << 1) | (b & 1u);
  return idx;
}

Bits index_to_bits(std::uint64_t index, int width) {
  Bits out(static_cast<std::size_t>(width));
  for (int i = 0; i < width; ++i)
    out[static_cast<std::size_t>(i)] =
        static_cast<std::uint8_t>((index >> (width - 1 - i)) & 1u);
  return out;
}

}  // namespace qhesim
