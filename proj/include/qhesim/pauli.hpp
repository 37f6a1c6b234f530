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
#include <vector>

#include "qhesim/statevector.hpp"

namespace qhesim {

// Quantum one-time-pad key: per-wire X and Z exponents. A wire that is not
// meant to be encrypted simply carries (0, 0) bits, so one code path covers
// every wire.
struct PauliKey {
  Bits x;
  Bits z;

  int num_wires() const { return static_cast<int>(x.size()); }
  // "x=100 z=110" (lowercase binary, x first).
  std::string str() const;
};

// Classical one-time pad.
struct ClassicalPad {
  Bits bits;
};

// Uniformly random n-wire key, deterministic per seed.
PauliKey gen_key(int n, std::uint64_t seed);

// Applies Z^z(k) X^x(k) (X first, then Z) to the k-th listed wire.
StateVector qotp_encrypt(const StateVector& state, const PauliKey& key,
                         const std::vector<int>& wires);

// Adjoint of qotp_encrypt: X^x(k) Z^z(k) per wire (Z first, then X).
// decrypt(encrypt(s)) == s up to a global phase.
StateVector qotp_decrypt(const StateVector& state, const PauliKey& key,
                         const std::vector<int>& wires);

// Bitwise XOR with a pad; self-inverse. Throws on length mismatch.
Bits otp_xor(const Bits& data, const ClassicalPad& pad);

// Recovers a plaintext measurement outcome: measured XOR dk.
Bits classical_decrypt(const Bits& measured, const Bits& dk);

}  // namespace qhesim
