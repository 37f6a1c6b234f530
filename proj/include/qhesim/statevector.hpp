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
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

#include "qhesim/bits.hpp"

namespace qhesim {

using cdouble = std::complex<double>;

// State-level comparisons (norms, fidelities, collapse feasibility).
inline constexpr double kStateTol = 1e-9;
// Gate-level comparisons (unitarity, matrix identities).
inline constexpr double kGateTol = 1e-12;

// The supported gate set. S = diag(1, i), T = diag(1, e^{i pi/4});
// Sdg/Tdg are their adjoints. Cnot is the only two-qubit member.
enum class GateKind { I, X, Y, Z, H, S, Sdg, T, Tdg, Cnot };

bool is_single_qubit(GateKind g);
// Everything except T/Tdg.
bool is_clifford_gate(GateKind g);
// Lowercase mnemonic ("h", "sdg", "cnot", ...).
std::string_view gate_name(GateKind g);
// Row-major 2x2 matrix; throws for Cnot.
std::array<cdouble, 4> gate_matrix(GateKind g);

// Dense complex amplitude vector over labeled wires.
//
// Wires are numbered 1..num_wires and wire 1 is the MOST significant bit of
// the amplitude index, i.e. |b1 b2 ... bn> sits at index sum b_w * 2^(n-w).
// All operations below are pure: they take the state by const reference and
// return a fresh value, so states can be copied and shared freely.
struct StateVector {
  int num_wires = 0;
  std::vector<cdouble> amps;

  std::size_t dim() const { return amps.size(); }
  // Amplitude-index bit selecting the given wire.
  std::uint64_t wire_mask(int wire) const;
  double norm() const;
};

// |bits>, one bit per wire. Throws if length(bits) != num_wires.
StateVector new_basis_state(int num_wires, const Bits& bits);

// Equal superposition of all 2^n basis states.
StateVector new_uniform(int num_wires);

// Tensor product; wires of `b` are appended after the wires of `a`.
StateVector tensor(const StateVector& a, const StateVector& b);

// Applies a single-qubit gate on one wire. Throws for Cnot or a bad wire.
StateVector apply_1q(const StateVector& state, GateKind gate, int wire);

// Flips the target-wire bit on branches where the control bit is 1.
StateVector apply_cnot(const StateVector& state, int control, int target);

// How measurement outcomes are chosen.
//
//  - Sampled(seed): Born-rule sampling from a deterministic seeded generator.
//  - Scripted(bits): outcomes are forced from a list, consumed in order.
//    Running out of bits, or forcing an outcome whose probability is below
//    kStateTol, is an error (the latter signals a convention mismatch or an
//    impossible transcript rather than a legitimate branch).
//  - Exhaustive: inspects the full outcome distribution and requires the
//    result to be deterministic (one outcome with probability 1 within
//    kStateTol); used where a protocol stage guarantees a definite result.
//
// A policy is a stateful value: the generator position / script cursor
// advances across sequential measurements.
class MeasurementPolicy {
 public:
  enum class Kind { Sampled, Scripted, Exhaustive };

  static MeasurementPolicy sampled(std::uint64_t seed);
  static MeasurementPolicy scripted(Bits script);
  static MeasurementPolicy exhaustive();

  Kind kind() const { return kind_; }
  // Picks the outcome given the probability of reading 1.
  int decide(double p1);

 private:
  MeasurementPolicy() = default;
  Kind kind_ = Kind::Sampled;
  std::mt19937_64 rng_{0};
  Bits script_;
  std::size_t next_ = 0;
};

// Measures one wire in the computational basis; returns the outcome and the
// renormalized collapsed state.
std::pair<int, StateVector> measure_wire(const StateVector& state, int wire,
                                         MeasurementPolicy& policy);

// Sequential measure_wire over the listed (distinct) wires, in list order.
std::pair<Bits, StateVector> measure_register(const StateVector& state,
                                              const std::vector<int>& wires,
                                              MeasurementPolicy& policy);

// Deletes a wire that is classically fixed to known_value on every branch
// (within kStateTol of all probability mass); remaining wires keep their
// relative order and are renumbered 1..n-1.
StateVector remove_wire(const StateVector& state, int wire, int known_value);

// Reorders wires so the wire at position `from` ends up at position `to`,
// shifting the wires in between by one.
StateVector move_wire(const StateVector& state, int from, int to);

// Probability of each outcome bit-string for the listed wires (list order).
// Entries below 1e-12 are omitted; the rest sum to 1 within kStateTol.
std::map<std::string, double> outcome_distribution(
    const StateVector& state, const std::vector<int>& wires);

cdouble inner_product(const StateVector& a, const StateVector& b);

// |<a|b>|^2.
double fidelity(const StateVector& a, const StateVector& b);

// True iff |<a|b>| >= 1 - tol. Throws on wire-count mismatch.
bool equal_up_to_global_phase(const StateVector& a, const StateVector& b,
                              double tol);

}  // namespace qhesim
