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

#include "qhesim/circuit.hpp"
#include "qhesim/pauli.hpp"

namespace qhesim {

// Per-gadget parameters: y and d are chosen by the key holder when the
// auxiliary qubit is prepared, c is the measurement bit reported back by
// the evaluator.
struct TParams {
  int y = 0;
  int d = 0;
  int c = 0;
};

// The evolving decryption key, with a round counter that increments by
// exactly one per applied update.
struct KeyRound {
  PauliKey key;
  int round = 0;
};

// Key evolution for a Clifford gate, one rule per gate:
//   I/X/Y/Z : unchanged
//   H_i     : swap (x(i), z(i))
//   S_i     : z(i) <- x(i) xor z(i)        (Sdg uses the same rule: Sdg = Z*S
//                                           and Z leaves the key alone)
//   CNOT_il : z(i) <- z(i) xor z(l),  x(l) <- x(i) xor x(l)
// wires is {i} for single-qubit gates and {control, target} for CNOT.
// T/Tdg must go through update_t instead.
KeyRound update_clifford(const KeyRound& kr, GateKind gate,
                         const std::vector<int>& wires);

// Key evolution for a T or Tdg gadget on one wire (identical rule for both):
//   x(i) <- x(i) xor c
//   z(i) <- x_old(i)*(c xor y xor 1) xor z(i) xor d xor y
KeyRound update_t(const KeyRound& kr, int wire, const TParams& p);

// Key finalization at a computational-basis measurement: the classical pad
// for the measured outcome is the x half of the current key.
Bits finalize_measurement(const KeyRound& kr);

// Folds the update rules over a compiled circuit; params supplies (y, d, c)
// for the gadget slots in circuit order and must match gadget_count.
PauliKey dk_transform(const HomomorphicCircuit& circuit, const PauliKey& ek,
                      const std::vector<TParams>& params);

// The key update of a Clifford circuit as a linear map over GF(2), acting on
// the concatenated vector (x(1..n) || z(1..n)). Every Clifford rule is a bit
// exchange or XOR, so the map is always invertible.
struct CliffordKeyMap {
  int num_wires = 0;
  // 2n rows; bit j of rows[i] is entry (i, j).
  std::vector<std::uint64_t> rows;

  int dim() const { return 2 * num_wires; }
};

// Builds the map column by column from the update fold. Throws if the
// circuit contains T/Tdg.
CliffordKeyMap clifford_key_matrix(const Circuit& circuit);

// Matrix-vector product over GF(2).
PauliKey apply_key_map(const CliffordKeyMap& map, const PauliKey& ek);

bool gf2_invertible(const CliffordKeyMap& map);

// One line per round: "r=<k> x=<bits> z=<bits>".
std::string format_key_trace(const std::vector<KeyRound>& trace);

}  // namespace qhesim
