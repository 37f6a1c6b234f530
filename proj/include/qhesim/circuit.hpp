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

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qhesim/statevector.hpp"

namespace qhesim {

struct Gate1Q {
  GateKind kind;
  int wire;
};

struct CNot {
  int control;
  int target;
};

// Placeholder left where a T/Tdg gate was compiled out for interactive
// evaluation; carries no parameters of its own.
struct GadgetSlot {
  int wire;
  bool dagger;
};

using CircuitOp = std::variant<Gate1Q, CNot, GadgetSlot>;

// Ordered gate list over the supported set. Plain circuits never contain
// GadgetSlot entries; those only appear in HomomorphicCircuit.
struct Circuit {
  int num_wires = 0;
  std::vector<CircuitOp> ops;
};

// A circuit rewritten for homomorphic evaluation: every T/Tdg replaced by a
// GadgetSlot, everything else copied in order.
struct HomomorphicCircuit {
  int num_wires = 0;
  std::vector<CircuitOp> ops;
  int gadget_count = 0;
};

class CircuitParseError : public std::runtime_error {
 public:
  CircuitParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Text format: one op per line, 1-based wires.
//   i W | x W | y W | z W | h W | s W | sdg W | t W | tdg W | cnot C T
// '#' starts a comment, blank lines are ignored. The wire count is inferred
// as the highest index used.
Circuit parse_circuit(std::string_view text);

// Canonical text form; parse_circuit(serialize_circuit(c)) == c.
std::string serialize_circuit(const Circuit& c);

int t_count(const Circuit& c);
bool is_clifford_circuit(const Circuit& c);

// Three-wire Toffoli over {H, S, T, Tdg, CNOT} with exactly seven T/Tdg
// gates; wires 1 and 2 control, wire 3 is the target.
Circuit toffoli();

// Phase oracle for a two-bit search target: X on every data wire whose
// target bit is 0, Toffoli onto the oracle wire (wire 3), X layer undone.
// Flips the sign of |target> exactly when the oracle wire holds |->.
Circuit build_oracle(int m, const Bits& target);

// One full Grover iteration (oracle + diffusion) for a two-bit target.
// The initial H layer is not included: the caller supplies the superposed
// input. On (uniform data register) x |->, the data wires measure to the
// target with probability 1.
Circuit build_grover(int m, const Bits& target);

// Same ops shifted onto wires offset+1.., embedded in total_wires.
Circuit embed(const Circuit& c, int wire_offset, int total_wires);

HomomorphicCircuit compile_homomorphic(const Circuit& c);

// Folds the gates over the input state; the brute-force reference for every
// homomorphic execution path. Throws if the circuit holds a GadgetSlot.
StateVector simulate_plain(const Circuit& c, const StateVector& input);

}  // namespace qhesim
