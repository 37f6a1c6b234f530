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

#include "qhesim/evaluation.hpp"

#include <stdexcept>

namespace qhesim {

HomomorphicRun run_homomorphic(
    const HomomorphicCircuit& circuit, const StateVector& cipher,
    const KeyRound& start, const std::function<AuxSpec(int)>& choose_aux,
    MeasurementPolicy& policy,
    const std::function<void(int, const StateVector&, const KeyRound&)>&
        on_step) {
  if (cipher.num_wires != circuit.num_wires)
    throw std::invalid_argument("cipher state does not span the circuit");
  if (start.key.num_wires() != circuit.num_wires)
    throw std::invalid_argument("key does not span the circuit");

  HomomorphicRun run{cipher, start, {}, {}};
  int gadget_index = 0;
  for (std::size_t i = 0; i < circuit.ops.size(); ++i) {
    const auto& op = circuit.ops[i];
    if (const auto* g = std::get_if<Gate1Q>(&op)) {
      run.state = apply_1q(run.state, g->kind, g->wire);
      run.key = update_clifford(run.key, g->kind, {g->wire});
    } else if (const auto* cn = std::get_if<CNot>(&op)) {
      run.state = apply_cnot(run.state, cn->control, cn->target);
      run.key = update_clifford(run.key, GateKind::Cnot,
                                {cn->control, cn->target});
    } else {
      const auto& slot = std::get<GadgetSlot>(op);
      const AuxSpec spec = choose_aux(gadget_index);
      const StateVector aux = prepare_aux(spec, slot.dagger);
      const int w = compute_w(
          run.key.key.x[static_cast<std::size_t>(slot.wire - 1)], spec.y);
      auto [c, next] = run_gadget(run.state, slot.wire, aux, w, slot.dagger,
                                  policy);
      run.state = std::move(next);
      run.key = update_t(run.key, slot.wire, TParams{spec.y, spec.d, c});
      run.gadgets.push_back(
          GadgetRecord{slot.wire, slot.dagger, spec.y, spec.d, w, c});
      ++gadget_index;
    }
    run.trace.push_back(run.key);
    if (on_step) on_step(static_cast<int>(i), run.state, run.key);
  }
  return run;
}

}  // namespace qhesim
