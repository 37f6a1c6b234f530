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

#include "qhesim/gadget.hpp"

#include <stdexcept>

namespace qhesim {

std::string format_gadget_records(const std::vector<GadgetRecord>& records) {
  std::string out;
  for (std::size_t k = 0; k < records.size(); ++k) {
    const auto& r = records[k];
    out += "gadget " + std::to_string(k + 1) + ": wire=" +
           std::to_string(r.wire) + " dagger=" + (r.dagger ? "1" : "0") +
           " y=" + std::to_string(r.y) + " d=" + std::to_string(r.d) +
           " w=" + std::to_string(r.w) + " c=" + std::to_string(r.c) + "\n";
  }
  return out;
}

StateVector prepare_aux(const AuxSpec& spec) { return prepare_aux(spec, false); }

StateVector prepare_aux(const AuxSpec& spec, bool dagger) {
  StateVector q = apply_1q(new_basis_state(1, {0}), GateKind::H, 1);
  if (spec.y) q = apply_1q(q, dagger ? GateKind::Sdg : GateKind::S, 1);
  if (spec.d) q = apply_1q(q, GateKind::Z, 1);
  return q;
}

int compute_w(int x_bit, int y) { return (x_bit ^ y) & 1; }

std::pair<int, StateVector> run_gadget(const StateVector& state, int wire,
                                       const StateVector& aux, int w,
                                       bool dagger, MeasurementPolicy& policy) {
  if (aux.num_wires != 1)
    throw std::invalid_argument("gadget aux must be a single qubit");
  if (wire < 1 || wire > state.num_wires)
    throw std::invalid_argument("gadget wire out of range");

  const int aux_wire = state.num_wires + 1;
  StateVector s = tensor(state, aux);
  s = apply_1q(s, dagger ? GateKind::Tdg : GateKind::T, wire);
  s = apply_cnot(s, aux_wire, wire);
  if (w) s = apply_1q(s, dagger ? GateKind::Sdg : GateKind::S, aux_wire);

  auto [c, measured] = measure_wire(s, wire, policy);
  StateVector out = remove_wire(measured, wire, c);
  out = move_wire(out, out.num_wires, wire);
  return {c, out};
}

}  // namespace qhesim
