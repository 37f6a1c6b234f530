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

#include "qhesim/statevector.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qhesim {

namespace {

constexpr cdouble kI{0.0, 1.0};
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void check_wire(const StateVector& state, int wire) {
  if (wire < 1 || wire > state.num_wires)
    throw std::invalid_argument("wire " + std::to_string(wire) +
                                " out of range 1.." +
                                std::to_string(state.num_wires));
}

// Uniform double in [0, 1) from the top 53 bits of the generator.
double uniform01(std::mt19937_64& rng) {
  return std::ldexp(static_cast<double>(rng() >> 11), -53);
}

}  // namespace

bool is_single_qubit(GateKind g) { return g != GateKind::Cnot; }

bool is_clifford_gate(GateKind g) {
  return g != GateKind::T && g != GateKind::Tdg;
}

std::string_view gate_name(GateKind g) {
  switch (g) {
    case GateKind::I: return "i";
    case GateKind::X: return "x";
    case GateKind::Y: return "y";
    case GateKind::Z: return "z";
    case GateKind::H: return "h";
    case GateKind::S: return "s";
    case GateKind::Sdg: return "sdg";
    case GateKind::T: return "t";
    case GateKind::Tdg: return "tdg";
    case GateKind::Cnot: return "cnot";
  }
  throw std::logic_error("unknown gate kind");
}

std::array<cdouble, 4> gate_matrix(GateKind g) {
  const cdouble t_phase = std::exp(kI * (std::numbers::pi / 4.0));
  switch (g) {
    case GateKind::I: return {1, 0, 0, 1};
    case GateKind::X: return {0, 1, 1, 0};
    case GateKind::Y: return {0, -kI, kI, 0};
    case GateKind::Z: return {1, 0, 0, -1};
    case GateKind::H: return {kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2};
    case GateKind::S: return {1, 0, 0, kI};
    case GateKind::Sdg: return {1, 0, 0, -kI};
    case GateKind::T: return {1, 0, 0, t_phase};
    case GateKind::Tdg: return {1, 0, 0, std::conj(t_phase)};
    case GateKind::Cnot:
      throw std::invalid_argument("cnot has no single-qubit matrix");
  }
  throw std::logic_error("unknown gate kind");
}

std::uint64_t StateVector::wire_mask(int wire) const {
  return std::uint64_t{1} << (num_wires - wire);
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const auto& a : amps) sum += std::norm(a);
  return std::sqrt(sum);
}

StateVector new_basis_state(int num_wires, const Bits& bits) {
  if (num_wires < 1)
    throw std::invalid_argument("num_wires must be positive");
  if (static_cast<int>(bits.size()) != num_wires)
    throw std::invalid_argument("basis bits length " +
                                std::to_string(bits.size()) +
                                " does not match wire count " +
                                std::to_string(num_wires));
  StateVector s;
  s.num_wires = num_wires;
  s.amps.assign(std::size_t{1} << num_wires, cdouble{0.0, 0.0});
  s.amps[bits_to_index(bits)] = 1.0;
  return s;
}

StateVector new_uniform(int num_wires) {
  if (num_wires < 1)
    throw std::invalid_argument("num_wires must be positive");
  StateVector s;
  s.num_wires = num_wires;
  const std::size_t dim = std::size_t{1} << num_wires;
  s.amps.assign(dim, cdouble{1.0 / std::sqrt(static_cast<double>(dim)), 0.0});
  return s;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  StateVector out;
  out.num_wires = a.num_wires + b.num_wires;
  out.amps.resize(a.dim() * b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      out.amps[i * b.dim() + j] = a.amps[i] * b.amps[j];
  return out;
}

StateVector apply_1q(const StateVector& state, GateKind gate, int wire) {
  if (!is_single_qubit(gate))
    throw std::invalid_argument("apply_1q cannot apply cnot; use apply_cnot");
  check_wire(state, wire);
  const auto m = gate_matrix(gate);
  const std::uint64_t mask = state.wire_mask(wire);
  StateVector out = state;
  for (std::uint64_t i = 0; i < out.dim(); ++i) {
    if (i & mask) continue;
    const cdouble a0 = state.amps[i];
    const cdouble a1 = state.amps[i | mask];
    out.amps[i] = m[0] * a0 + m[1] * a1;
    out.amps[i | mask] = m[2] * a0 + m[3] * a1;
  }
  return out;
}

StateVector apply_cnot(const StateVector& state, int control, int target) {
  check_wire(state, control);
  check_wire(state, target);
  if (control == target)
    throw std::invalid_argument("cnot control and target must differ");
  const std::uint64_t cmask = state.wire_mask(control);
  const std::uint64_t tmask = state.wire_mask(target);
  StateVector out = state;
  for (std::uint64_t i = 0; i < out.dim(); ++i)
    if ((i & cmask) && !(i & tmask))
      std::swap(out.amps[i], out.amps[i | tmask]);
  return out;
}

MeasurementPolicy MeasurementPolicy::sampled(std::uint64_t seed) {
  MeasurementPolicy p;
  p.kind_ = Kind::Sampled;
  p.rng_.seed(seed);
  return p;
}

MeasurementPolicy MeasurementPolicy::scripted(Bits script) {
  MeasurementPolicy p;
  p.kind_ = Kind::Scripted;
  p.script_ = std::move(script);
  return p;
}

MeasurementPolicy MeasurementPolicy::exhaustive() {
  MeasurementPolicy p;
  p.kind_ = Kind::Exhaustive;
  return p;
}

int MeasurementPolicy::decide(double p1) {
  switch (kind_) {
    case Kind::Sampled:
      return uniform01(rng_) < p1 ? 1 : 0;
    case Kind::Scripted:
      if (next_ >= script_.size())
        throw std::runtime_error("scripted measurement list exhausted after " +
                                 std::to_string(script_.size()) + " bits");
      return script_[next_++];
    case Kind::Exhaustive:
      if (p1 >= 1.0 - kStateTol) return 1;
      if (p1 <= kStateTol) return 0;
      throw std::runtime_error(
          "exhaustive measurement requires a deterministic outcome; p(1)=" +
          std::to_string(p1));
  }
  throw std::logic_error("unknown measurement policy");
}

std::pair<int, StateVector> measure_wire(const StateVector& state, int wire,
                                         MeasurementPolicy& policy) {
  check_wire(state, wire);
  const std::uint64_t mask = state.wire_mask(wire);
  double p1 = 0.0;
  for (std::uint64_t i = 0; i < state.dim(); ++i)
    if (i & mask) p1 += std::norm(state.amps[i]);

  const int bit = policy.decide(p1);
  const double p_bit = bit ? p1 : 1.0 - p1;
  if (policy.kind() == MeasurementPolicy::Kind::Scripted && p_bit <= kStateTol)
    throw std::runtime_error(
        "scripted outcome " + std::to_string(bit) + " on wire " +
        std::to_string(wire) + " has probability " + std::to_string(p_bit) +
        "; impossible transcript or convention mismatch");

  StateVector out = state;
  const double scale = 1.0 / std::sqrt(p_bit);
  for (std::uint64_t i = 0; i < out.dim(); ++i) {
    const bool is_one = (i & mask) != 0;
    if (is_one == (bit == 1))
      out.amps[i] *= scale;
    else
      out.amps[i] = 0.0;
  }
  return {bit, out};
}

std::pair<Bits, StateVector> measure_register(const StateVector& state,
                                              const std::vector<int>& wires,
                                              MeasurementPolicy& policy) {
  for (std::size_t i = 0; i < wires.size(); ++i)
    for (std::size_t j = i + 1; j < wires.size(); ++j)
      if (wires[i] == wires[j])
        throw std::invalid_argument("measure_register wires must be distinct");
  Bits outcome;
  StateVector cur = state;
  for (int w : wires) {
    auto [bit, next] = measure_wire(cur, w, policy);
    outcome.push_back(static_cast<std::uint8_t>(bit));
    cur = std::move(next);
  }
  return {outcome, cur};
}

StateVector remove_wire(const StateVector& state, int wire, int known_value) {
  check_wire(state, wire);
  if (state.num_wires < 2)
    throw std::invalid_argument("cannot remove the last wire");
  const std::uint64_t mask = state.wire_mask(wire);
  double wrong_mass = 0.0;
  for (std::uint64_t i = 0; i < state.dim(); ++i) {
    const bool is_one = (i & mask) != 0;
    if (is_one != (known_value == 1)) wrong_mass += std::norm(state.amps[i]);
  }
  if (wrong_mass > kStateTol)
    throw std::runtime_error("wire " + std::to_string(wire) +
                             " is not classically fixed to " +
                             std::to_string(known_value) +
                             " (off-branch mass " + std::to_string(wrong_mass) +
                             ")");

  StateVector out;
  out.num_wires = state.num_wires - 1;
  out.amps.assign(state.dim() / 2, cdouble{0.0, 0.0});
  const std::uint64_t low = mask - 1;  // bits below the removed wire
  for (std::uint64_t i = 0; i < state.dim(); ++i) {
    const bool is_one = (i & mask) != 0;
    if (is_one != (known_value == 1)) continue;
    const std::uint64_t j = ((i >> 1) & ~low) | (i & low);
    out.amps[j] = state.amps[i];
  }
  const double n = out.norm();
  for (auto& a : out.amps) a /= n;
  return out;
}

StateVector move_wire(const StateVector& state, int from, int to) {
  check_wire(state, from);
  check_wire(state, to);
  if (from == to) return state;
  const int n = state.num_wires;
  // order[k] = which source wire feeds destination position k+1.
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  for (int w = 1; w <= n; ++w)
    if (w != from) order.push_back(w);
  order.insert(order.begin() + (to - 1), from);

  StateVector out = state;
  for (std::uint64_t i = 0; i < state.dim(); ++i) {
    std::uint64_t j = 0;
    for (int k = 0; k < n; ++k) {
      const std::uint64_t bit = (i >> (n - order[static_cast<std::size_t>(k)])) & 1u;
      j |= bit << (n - 1 - k);
    }
    out.amps[j] = state.amps[i];
  }
  return out;
}

std::map<std::string, double> outcome_distribution(
    const StateVector& state, const std::vector<int>& wires) {
  for (std::size_t i = 0; i < wires.size(); ++i) {
    check_wire(state, wires[i]);
    for (std::size_t j = i + 1; j < wires.size(); ++j)
      if (wires[i] == wires[j])
        throw std::invalid_argument("distribution wires must be distinct");
  }
  std::map<std::string, double> dist;
  for (std::uint64_t i = 0; i < state.dim(); ++i) {
    const double p = std::norm(state.amps[i]);
    if (p == 0.0) continue;
    std::string key;
    key.reserve(wires.size());
    for (int w : wires)
      key.push_back((i & state.wire_mask(w)) ? '1' : '0');
    dist[key] += p;
  }
  for (auto it = dist.begin(); it != dist.end();)
    it = (it->second < 1e-12) ? dist.erase(it) : std::next(it);
  return dist;
}

cdouble inner_product(const StateVector& a, const StateVector& b) {
  if (a.num_wires != b.num_wires)
    throw std::invalid_argument("inner product on mismatched wire counts");
  cdouble sum{0.0, 0.0};
  for (std::size_t i = 0; i < a.dim(); ++i)
    sum += std::conj(a.amps[i]) * b.amps[i];
  return sum;
}

double fidelity(const StateVector& a, const StateVector& b) {
  return std::norm(inner_product(a, b));
}

bool equal_up_to_global_phase(const StateVector& a, const StateVector& b,
                              double tol) {
  return std::abs(inner_product(a, b)) >= 1.0 - tol;
}

}  // namespace qhesim
