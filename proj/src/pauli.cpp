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

#include "qhesim/pauli.hpp"

#include <random>
#include <stdexcept>

namespace qhesim {

namespace {

void check_key_wires(const PauliKey& key, const std::vector<int>& wires) {
  if (key.x.size() != key.z.size())
    throw std::invalid_argument("pauli key halves differ in length");
  if (wires.size() != key.x.size())
    throw std::invalid_argument("key length " + std::to_string(key.x.size()) +
                                " does not match wire list length " +
                                std::to_string(wires.size()));
  for (std::size_t i = 0; i < wires.size(); ++i)
    for (std::size_t j = i + 1; j < wires.size(); ++j)
      if (wires[i] == wires[j])
        throw std::invalid_argument("qotp wires must be distinct");
}

}  // namespace

std::string PauliKey::str() const {
  return "x=" + bits_to_string(x) + " z=" + bits_to_string(z);
}

PauliKey gen_key(int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("key length must be positive");
  std::mt19937_64 rng(seed);
  PauliKey key;
  key.x.resize(static_cast<std::size_t>(n));
  key.z.resize(static_cast<std::size_t>(n));
  for (auto& b : key.x) b = static_cast<std::uint8_t>(rng() & 1u);
  for (auto& b : key.z) b = static_cast<std::uint8_t>(rng() & 1u);
  return key;
}

StateVector qotp_encrypt(const StateVector& state, const PauliKey& key,
                         const std::vector<int>& wires) {
  check_key_wires(key, wires);
  StateVector out = state;
  for (std::size_t k = 0; k < wires.size(); ++k) {
    if (key.x[k]) out = apply_1q(out, GateKind::X, wires[k]);
    if (key.z[k]) out = apply_1q(out, GateKind::Z, wires[k]);
  }
  return out;
}

StateVector qotp_decrypt(const StateVector& state, const PauliKey& key,
                         const std::vector<int>& wires) {
  check_key_wires(key, wires);
  StateVector out = state;
  for (std::size_t k = 0; k < wires.size(); ++k) {
    if (key.z[k]) out = apply_1q(out, GateKind::Z, wires[k]);
    if (key.x[k]) out = apply_1q(out, GateKind::X, wires[k]);
  }
  return out;
}

Bits otp_xor(const Bits& data, const ClassicalPad& pad) {
  return xor_bits(data, pad.bits);
}

Bits classical_decrypt(const Bits& measured, const Bits& dk) {
  return xor_bits(measured, dk);
}

}  // namespace qhesim
