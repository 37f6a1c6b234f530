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

#include <array>

namespace qhesim {

// Recorded two-qubit blind-search runs for target 10 on the uniform |+>|+>
// register: forced encryption key, per-gadget (y, d), scripted gadget
// measurements, and the exact outcomes the replay must reproduce.
struct ReferenceRow {
  const char* x0;
  const char* z0;
  const char* y1;
  const char* d1;
  const char* c1;
  const char* encrypted;
  const char* dk;
  const char* decrypted;
};

inline constexpr std::array<ReferenceRow, 5> kReferenceRows{{
    {"100", "110", "1010110", "0111001", "1110111", "01", "11", "10"},
    {"100", "010", "1110011", "1011010", "1000010", "00", "10", "10"},
    {"100", "100", "0100001", "0000101", "0000101", "01", "11", "10"},
    {"010", "110", "0000011", "0111110", "1001101", "11", "01", "10"},
    {"110", "110", "0101100", "0001010", "1011101", "10", "00", "10"},
}};

inline constexpr const char* kReferenceTarget = "10";

}  // namespace qhesim
