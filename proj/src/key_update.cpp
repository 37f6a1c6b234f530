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

#include "qhesim/key_update.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace qhesim {

namespace {

void check_wire(const PauliKey& key, int wire) {
  if (wire < 1 || wire > key.num_wires())
    throw std::invalid_argument("key wire " + std::to_string(wire) +
                                " out of range 1.." +
                                std::to_string(key.num_wires()));
}

std::uint64_t pack_key(const PauliKey& key) {
  std::uint64_t v = 0;
  const int n = key.num_wires();
  for (int i = 0; i < n; ++i) {
    if (key.x[static_cast<std::size_t>(i)]) v |= std::uint64_t{1} << i;
    if (key.z[static_cast<std::size_t>(i)]) v |= std::uint64_t{1} << (n + i);
  }
  return v;
}

PauliKey unpack_key(std::uint64_t v, int n) {
  PauliKey key;
  key.x.resize(static_cast<std::size_t>(n));
  key.z.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    key.x[static_cast<std::size_t>(i)] =
        static_cast<std::uint8_t>((v >> i) & 1u);
    key.z[static_cast<std::size_t>(i)] =
        static_cast<std::uint8_t>((v >> (n + i)) & 1u);
  }
  return key;
}

}  // namespace

KeyRound update_clifford(const KeyRound& kr, GateKind gate,
                         const std::vector<int>& wires) {
  KeyRound out = kr;
  out.round = kr.round + 1;
  auto& x = out.key.x;
  auto& z = out.key.z;

  if (gate == GateKind::Cnot) {
    if (wires.size() != 2)
      throw std::invalid_argument("cnot key update needs {control, target}");
    check_wire(kr.key, wires[0]);
    check_wire(kr.key, wires[1]);
    if (wires[0] == wires[1])
      throw std::invalid_argument("cnot control equals target");
    const std::size_t i = static_cast<std::size_t>(wires[0] - 1);
    const std::size_t l = static_cast<std::size_t>(wires[1] - 1);
    z[i] = z[i] ^ z[l];
    x[l] = x[i] ^ x[l];
    return out;
  }

  if (wires.size() != 1)
    throw std::invalid_argument("single-qubit key update needs one wire");
  check_wire(kr.key, wires[0]);
  const std::size_t i = static_cast<std::size_t>(wires[0] - 1);

  switch (gate) {
    case GateKind::I:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
      break;
    case GateKind::H:
      std::swap(x[i], z[i]);
      break;
    case GateKind::S:
    case GateKind::Sdg:
      z[i] = x[i] ^ z[i];
      break;
    case GateKind::T:
    case GateKind::Tdg:
      throw std::invalid_argument("T/Tdg key updates go through update_t");
    case GateKind::Cnot:
      break;  // unreachable
  }
  return out;
}

KeyRound update_t(const KeyRound& kr, int wire, const TParams& p) {
  check_wire(kr.key, wire);
  KeyRound out = kr;
  out.round = kr.round + 1;
  const std::size_t i = static_cast<std::size_t>(wire - 1);
  const int x_old = kr.key.x[i];
  out.key.x[i] = static_cast<std::uint8_t>(x_old ^ p.c);
  out.key.z[i] = static_cast<std::uint8_t>(
      (x_old & (p.c ^ p.y ^ 1)) ^ kr.key.z[i] ^ p.d ^ p.y);
  return out;
}

Bits finalize_measurement(const KeyRound& kr) { return kr.key.x; }

PauliKey dk_transform(const HomomorphicCircuit& circuit, const PauliKey& ek,
                      const std::vector<TParams>& params) {
  if (static_cast<int>(params.size()) != circuit.gadget_count)
    throw std::invalid_argument(
        "gadget parameter count " + std::to_string(params.size()) +
        " does not match gadget slots " +
        std::to_string(circuit.gadget_count));
  if (ek.num_wires() != circuit.num_wires)
    throw std::invalid_argument("key does not span the circuit wires");

  KeyRound kr{ek, 0};
  std::size_t gadget = 0;
  for (const auto& op : circuit.ops) {
    if (const auto* g = std::get_if<Gate1Q>(&op))
      kr = update_clifford(kr, g->kind, {g->wire});
    else if (const auto* cn = std::get_if<CNot>(&op))
      kr = update_clifford(kr, GateKind::Cnot, {cn->control, cn->target});
    else
      kr = update_t(kr, std::get<GadgetSlot>(op).wire, params[gadget++]);
  }
  return kr.key;
}

CliffordKeyMap clifford_key_matrix(const Circuit& circuit) {
  if (!is_clifford_circuit(circuit))
    throw std::invalid_argument(
        "key matrix exists only for circuits without T/Tdg");
  const int n = circuit.num_wires;
  const int dim = 2 * n;
  if (dim > 64)
    throw std::invalid_argument("key map supports at most 32 wires");

  const HomomorphicCircuit hc = compile_homomorphic(circuit);
  CliffordKeyMap map;
  map.num_wires = n;
  map.rows.assign(static_cast<std::size_t>(dim), 0);
  for (int col = 0; col < dim; ++col) {
    const PauliKey basis = unpack_key(std::uint64_t{1} << col, n);
    const std::uint64_t image = pack_key(dk_transform(hc, basis, {}));
    for (int row = 0; row < dim; ++row)
      if ((image >> row) & 1u)
        map.rows[static_cast<std::size_t>(row)] |= std::uint64_t{1} << col;
  }
  return map;
}

PauliKey apply_key_map(const CliffordKeyMap& map, const PauliKey& ek) {
  if (ek.num_wires() != map.num_wires)
    throw std::invalid_argument("key length does not match map dimension");
  const std::uint64_t v = pack_key(ek);
  std::uint64_t out = 0;
  for (int row = 0; row < map.dim(); ++row)
    if (std::popcount(map.rows[static_cast<std::size_t>(row)] & v) & 1)
      out |= std::uint64_t{1} << row;
  return unpack_key(out, map.num_wires);
}

bool gf2_invertible(const CliffordKeyMap& map) {
  std::vector<std::uint64_t> rows = map.rows;
  const int dim = map.dim();
  int rank = 0;
  for (int col = 0; col < dim; ++col) {
    int pivot = -1;
    for (int r = rank; r < dim; ++r)
      if ((rows[static_cast<std::size_t>(r)] >> col) & 1u) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<std::size_t>(pivot)],
              rows[static_cast<std::size_t>(rank)]);
    for (int r = 0; r < dim; ++r)
      if (r != rank && ((rows[static_cast<std::size_t>(r)] >> col) & 1u))
        rows[static_cast<std::size_t>(r)] ^=
            rows[static_cast<std::size_t>(rank)];
    ++rank;
  }
  return rank == dim;
}

std::string format_key_trace(const std::vector<KeyRound>& trace) {
  std::string out;
  for (const auto& kr : trace)
    out += "r=" + std::to_string(kr.round) + " x=" + bits_to_string(kr.key.x) +
           " z=" + bits_to_string(kr.key.z) + "\n";
  return out;
}

}  // namespace qhesim
