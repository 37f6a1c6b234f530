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

#include <string>
#include <utility>
#include <vector>

#include "qhesim/statevector.hpp"

namespace qhesim {

// Phase bits for one auxiliary qubit, chosen by the key holder.
struct AuxSpec {
  int y = 0;
  int d = 0;
};

// Everything one gadget exchange produced: the wire it acted on, the chosen
// (y, d), the transmitted correction bit w, and the reported measurement c.
// w is always x_bit xor y for the x-key bit of the wire just before the
// gadget.
struct GadgetRecord {
  int wire = 0;
  bool dagger = false;
  int y = 0;
  int d = 0;
  int w = 0;
  int c = 0;
};

// "gadget k: wire=<i> dagger=<0|1> y=<b> d=<b> w=<b> c=<b>" per record.
std::string format_gadget_records(const std::vector<GadgetRecord>& records);

// Z^d S^y H|0>, one of the four states |+>, |->, |+_y>, |-_y>.
StateVector prepare_aux(const AuxSpec& spec);

// Auxiliary qubit for a Tdg gadget: Z^d Sdg^y H|0> (every S inside the
// gadget, including the preparation phase, becomes Sdg).
StateVector prepare_aux(const AuxSpec& spec, bool dagger);

// The correction bit the evaluator is told to use: x_bit xor y.
int compute_w(int x_bit, int y);

// Runs one T (or Tdg) gadget on the given data wire:
//   1. append aux as the last wire
//   2. T (Tdg) on the data wire
//   3. CNOT, control = aux, target = data wire
//   4. S^w (Sdg^w) on the aux wire
//   5. measure the data wire -> c
//   6. drop the measured wire; the aux wire takes its logical position
// Returns (c, state); the state keeps the input wire count.
std::pair<int, StateVector> run_gadget(const StateVector& state, int wire,
                                       const StateVector& aux, int w,
                                       bool dagger, MeasurementPolicy& policy);

}  // namespace qhesim
