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

#include <functional>
#include <vector>

#include "qhesim/circuit.hpp"
#include "qhesim/gadget.hpp"
#include "qhesim/key_update.hpp"

namespace qhesim {

struct HomomorphicRun {
  StateVector state;
  KeyRound key;
  std::vector<GadgetRecord> gadgets;
  // Key after every applied op; format_key_trace renders it.
  std::vector<KeyRound> trace;
};

// Single-machine driver for a compiled circuit: applies each op to the
// cipher state while evolving the key in lockstep. choose_aux supplies
// (y, d) for each gadget slot (by gadget index); policy decides the gadget
// measurement bits. on_step, when set, observes (op index, state, key)
// after every op — decrypt-after-every-prefix checks hook in there.
HomomorphicRun run_homomorphic(
    const HomomorphicCircuit& circuit, const StateVector& cipher,
    const KeyRound& start, const std::function<AuxSpec(int)>& choose_aux,
    MeasurementPolicy& policy,
    const std::function<void(int, const StateVector&, const KeyRound&)>&
        on_step = {});

}  // namespace qhesim
