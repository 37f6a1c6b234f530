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

#include "qhesim/circuit.hpp"

#include <optional>
#include <sstream>

namespace qhesim {

namespace {

std::optional<GateKind> gate_from_name(std::string_view name) {
  for (GateKind g : {GateKind::I, GateKind::X, GateKind::Y, GateKind::Z,
                     GateKind::H, GateKind::S, GateKind::Sdg, GateKind::T,
                     GateKind::Tdg, GateKind::Cnot})
    if (gate_name(g) == name) return g;
  return std::nullopt;
}

void append_gate(Circuit& c, GateKind kind, int wire) {
  c.ops.push_back(Gate1Q{kind, wire});
  if (wire > c.num_wires) c.num_wires = wire;
}

void append_cnot(Circuit& c, int control, int target) {
  c.ops.push_back(CNot{control, target});
  c.num_wires = std::max({c.num_wires, control, target});
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  Circuit c;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string mnemonic;
    if (!(ls >> mnemonic)) continue;  // blank or comment-only line

    auto kind = gate_from_name(mnemonic);
    if (!kind)
      throw CircuitParseError(lineno, "unknown mnemonic '" + mnemonic + "'");

    auto read_wire = [&](const char* what) {
      int w;
      if (!(ls >> w))
        throw CircuitParseError(lineno, std::string("missing ") + what +
                                            " for '" + mnemonic + "'");
      if (w < 1)
        throw CircuitParseError(lineno, std::string(what) + " must be >= 1");
      return w;
    };

    if (*kind == GateKind::Cnot) {
      const int control = read_wire("control wire");
      const int target = read_wire("target wire");
      if (control == target)
        throw CircuitParseError(lineno, "cnot control equals target");
      std::string extra;
      if (ls >> extra)
        throw CircuitParseError(lineno, "trailing token '" + extra + "'");
      append_cnot(c, control, target);
    } else {
      const int wire = read_wire("wire");
      std::string extra;
      if (ls >> extra)
        throw CircuitParseError(lineno, "trailing token '" + extra + "'");
      append_gate(c, *kind, wire);
    }
  }
  if (c.num_wires == 0)
    throw CircuitParseError(lineno, "circuit has no operations");
  return c;
}

std::string serialize_circuit(const Circuit& c) {
  std::string out;
  for (const auto& op : c.ops) {
    if (const auto* g = std::get_if<Gate1Q>(&op)) {
      out += std::string(gate_name(g->kind)) + " " + std::to_string(g->wire);
    } else if (const auto* cn = std::get_if<CNot>(&op)) {
      out += "cnot " + std::to_string(cn->control) + " " +
             std::to_string(cn->target);
    } else {
      throw std::invalid_argument("plain circuit holds a gadget slot");
    }
    out += '\n';
  }
  return out;
}

int t_count(const Circuit& c) {
  int count = 0;
  for (const auto& op : c.ops)
    if (const auto* g = std::get_if<Gate1Q>(&op))
      if (g->kind == GateKind::T || g->kind == GateKind::Tdg) ++count;
  return count;
}

bool is_clifford_circuit(const Circuit& c) { return t_count(c) == 0; }

Circuit toffoli() {
  Circuit c;
  c.num_wires = 3;
  append_gate(c, GateKind::H, 3);
  append_cnot(c, 2, 3);
  append_gate(c, GateKind::Tdg, 3);
  append_cnot(c, 1, 3);
  append_gate(c, GateKind::T, 3);
  append_cnot(c, 2, 3);
  append_gate(c, GateKind::Tdg, 3);
  append_cnot(c, 1, 3);
  append_gate(c, GateKind::T, 3);
  append_gate(c, GateKind::Tdg, 2);
  append_cnot(c, 1, 2);
  append_gate(c, GateKind::Tdg, 2);
  append_cnot(c, 1, 2);
  append_gate(c, GateKind::T, 1);
  append_gate(c, GateKind::S, 2);
  append_gate(c, GateKind::H, 3);
  return c;
}

Circuit build_oracle(int m, const Bits& target) {
  if (m != 2)
    throw std::invalid_argument("search oracle is built for m = 2 only");
  if (static_cast<int>(target.size()) != m)
    throw std::invalid_argument("target length must equal m");
  Circuit c;
  c.num_wires = 3;
  for (int w = 1; w <= m; ++w)
    if (!target[static_cast<std::size_t>(w - 1)]) append_gate(c, GateKind::X, w);
  for (const auto& op : toffoli().ops) c.ops.push_back(op);
  for (int w = 1; w <= m; ++w)
    if (!target[static_cast<std::size_t>(w - 1)]) append_gate(c, GateKind::X, w);
  return c;
}

Circuit build_grover(int m, const Bits& target) {
  Circuit c = build_oracle(m, target);
  // Diffusion about the uniform state: H/X conjugation around a CZ realized
  // as H on wire 2 either side of CNOT(1,2).
  append_gate(c, GateKind::H, 1);
  append_gate(c, GateKind::H, 2);
  append_gate(c, GateKind::X, 1);
  append_gate(c, GateKind::X, 2);
  append_gate(c, GateKind::H, 2);
  append_cnot(c, 1, 2);
  append_gate(c, GateKind::H, 2);
  append_gate(c, GateKind::X, 1);
  append_gate(c, GateKind::X, 2);
  append_gate(c, GateKind::H, 1);
  append_gate(c, GateKind::H, 2);
  return c;
}

Circuit embed(const Circuit& c, int wire_offset, int total_wires) {
  if (wire_offset < 0 || c.num_wires + wire_offset > total_wires)
    throw std::invalid_argument("embedded circuit does not fit");
  Circuit out;
  out.num_wires = total_wires;
  out.ops.reserve(c.ops.size());
  for (const auto& op : c.ops) {
    if (const auto* g = std::get_if<Gate1Q>(&op))
      out.ops.push_back(Gate1Q{g->kind, g->wire + wire_offset});
    else if (const auto* cn = std::get_if<CNot>(&op))
      out.ops.push_back(
          CNot{cn->control + wire_offset, cn->target + wire_offset});
    else
      throw std::invalid_argument("plain circuit holds a gadget slot");
  }
  return out;
}

HomomorphicCircuit compile_homomorphic(const Circuit& c) {
  HomomorphicCircuit hc;
  hc.num_wires = c.num_wires;
  hc.ops.reserve(c.ops.size());
  for (const auto& op : c.ops) {
    if (const auto* g = std::get_if<Gate1Q>(&op);
        g && (g->kind == GateKind::T || g->kind == GateKind::Tdg)) {
      hc.ops.push_back(GadgetSlot{g->wire, g->kind == GateKind::Tdg});
      ++hc.gadget_count;
    } else {
      hc.ops.push_back(op);
    }
  }
  return hc;
}

StateVector simulate_plain(const Circuit& c, const StateVector& input) {
  if (input.num_wires != c.num_wires)
    throw std::invalid_argument("input has " + std::to_string(input.num_wires) +
                                " wires, circuit needs " +
                                std::to_string(c.num_wires));
  StateVector state = input;
  for (const auto& op : c.ops) {
    if (const auto* g = std::get_if<Gate1Q>(&op))
      state = apply_1q(state, g->kind, g->wire);
    else if (const auto* cn = std::get_if<CNot>(&op))
      state = apply_cnot(state, cn->control, cn->target);
    else
      throw std::invalid_argument("plain simulation cannot run a gadget slot");
  }
  return state;
}

}  // namespace qhesim
