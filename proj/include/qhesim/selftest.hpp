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
#include <random>
#include <string>
#include <vector>

#include "qhesim/circuit.hpp"
#include "qhesim/statevector.hpp"

namespace qhesim {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// Haar-ish random pure state (normalized complex Gaussian amplitudes).
StateVector random_state(std::mt19937_64& rng, int num_wires);

// Random circuit over the supported set. clifford_only drops T/Tdg;
// otherwise at most max_t_gates of them are placed.
Circuit random_circuit(std::mt19937_64& rng, int num_wires, int num_gates,
                       int max_t_gates, bool clifford_only);

// Key-averaged cipher density matrix equals the maximally mixed state,
// exhaustively over all keys for 1- and 2-wire fixed states.
SuiteResult check_qotp_mixing();

// Random compiled circuits decrypt to the plain evaluation after every
// prefix of the homomorphic execution.
SuiteResult check_stepwise_decryption(std::uint64_t seed, int num_circuits);

// The Clifford key map agrees with the update fold (exhaustive keys for
// n <= 2, sampled for n = 3), is invertible, and fixes the zero key.
SuiteResult check_gf2_linearity(std::uint64_t seed);

// Every (x, z, y, d) combination, both measurement outcomes, T and Tdg:
// the gadget output decrypts under the refreshed key to T (Tdg) applied to
// the plaintext.
SuiteResult check_gadget_correctness(std::uint64_t seed,
                                     int plaintexts_per_combo);

// The Toffoli decomposition multiplies out to the Toffoli matrix up to a
// global phase and spends exactly seven T/Tdg gates.
SuiteResult check_toffoli_equivalence();

std::vector<SuiteResult> run_selftest(std::uint64_t seed);

}  // namespace qhesim
