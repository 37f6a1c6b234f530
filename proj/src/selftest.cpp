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

#include "qhesim/selftest.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>

#include "qhesim/evaluation.hpp"
#include "qhesim/key_update.hpp"
#include "qhesim/pauli.hpp"

namespace qhesim {

namespace {

double uniform01(std::mt19937_64& rng) {
  return std::ldexp(static_cast<double>(rng() >> 11), -53);
}

// Box-Muller; avoids the implementation-defined std::normal_distribution.
double gaussian(std::mt19937_64& rng) {
  double u = 0.0;
  while (u == 0.0) u = uniform01(rng);
  const double v = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u)) *
         std::cos(2.0 * std::numbers::pi * v);
}

std::vector<int> all_wires(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return w;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

}  // namespace

StateVector random_state(std::mt19937_64& rng, int num_wires) {
  StateVector s;
  s.num_wires = num_wires;
  s.amps.resize(std::size_t{1} << num_wires);
  for (auto& a : s.amps) a = cdouble{gaussian(rng), gaussian(rng)};
  const double n = s.norm();
  for (auto& a : s.amps) a /= n;
  return s;
}

Circuit random_circuit(std::mt19937_64& rng, int num_wires, int num_gates,
                       int max_t_gates, bool clifford_only) {
  static constexpr GateKind kCliffordPool[] = {
      GateKind::I, GateKind::X, GateKind::Y, GateKind::Z,
      GateKind::H, GateKind::S, GateKind::Sdg};
  Circuit c;
  c.num_wires = num_wires;
  int t_left = clifford_only ? 0 : max_t_gates;
  for (int g = 0; g < num_gates; ++g) {
    const int wire = 1 + static_cast<int>(rng() % num_wires);
    const std::uint64_t pick = rng() % 10;
    if (num_wires >= 2 && pick < 3) {
      int target = 1 + static_cast<int>(rng() % num_wires);
      while (target == wire) target = 1 + static_cast<int>(rng() % num_wires);
      c.ops.push_back(CNot{wire, target});
    } else if (t_left > 0 && pick >= 7) {
      c.ops.push_back(Gate1Q{(rng() & 1u) ? GateKind::Tdg : GateKind::T, wire});
      --t_left;
    } else {
      c.ops.push_back(Gate1Q{kCliffordPool[rng() % std::size(kCliffordPool)],
                             wire});
    }
  }
  return c;
}

SuiteResult check_qotp_mixing() {
  SuiteResult result{"qotp-mixing", true, ""};
  double worst = 0.0;

  for (int n = 1; n <= 2; ++n) {
    // Two fixed states per width: one with a T phase, one entangled/product.
    std::vector<StateVector> states;
    {
      StateVector a = apply_1q(new_uniform(n), GateKind::T, 1);
      states.push_back(a);
      StateVector b = new_basis_state(n, Bits(static_cast<std::size_t>(n), 0));
      b = apply_1q(b, GateKind::H, 1);
      if (n == 2) b = apply_cnot(b, 1, 2);
      states.push_back(b);
    }

    const auto wires = all_wires(n);
    const std::size_t dim = std::size_t{1} << n;
    const std::uint64_t num_keys = std::uint64_t{1} << (2 * n);
    for (const auto& psi : states) {
      std::vector<cdouble> rho(dim * dim, cdouble{0.0, 0.0});
      for (std::uint64_t k = 0; k < num_keys; ++k) {
        PauliKey key;
        key.x = index_to_bits(k >> n, n);
        key.z = index_to_bits(k & ((1u << n) - 1), n);
        const StateVector enc = qotp_encrypt(psi, key, wires);
        for (std::size_t i = 0; i < dim; ++i)
          for (std::size_t j = 0; j < dim; ++j)
            rho[i * dim + j] +=
                enc.amps[i] * std::conj(enc.amps[j]) /
                static_cast<double>(num_keys);
      }
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) {
          const cdouble want =
              (i == j) ? cdouble{1.0 / static_cast<double>(dim), 0.0}
                       : cdouble{0.0, 0.0};
          worst = std::max(worst, std::abs(rho[i * dim + j] - want));
        }
    }
  }

  result.passed = worst <= 1e-10;
  result.detail = "max deviation from I/2^n: " + fmt(worst);
  return result;
}

SuiteResult check_stepwise_decryption(std::uint64_t seed, int num_circuits) {
  SuiteResult result{"stepwise-decryption", true, ""};
  std::mt19937_64 rng(seed);
  double worst = 1.0;

  for (int trial = 0; trial < num_circuits; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int gates = 1 + static_cast<int>(rng() % 40);
    const Circuit circuit = random_circuit(rng, n, gates, 8, false);
    const HomomorphicCircuit compiled = compile_homomorphic(circuit);

    const StateVector plain = random_state(rng, n);
    const PauliKey ek = gen_key(n, rng());
    const auto wires = all_wires(n);
    const StateVector cipher = qotp_encrypt(plain, ek, wires);

    // Plain execution after every prefix, the independent reference.
    std::vector<StateVector> plains;
    plains.reserve(circuit.ops.size());
    StateVector cur = plain;
    for (const auto& op : circuit.ops) {
      if (const auto* g = std::get_if<Gate1Q>(&op))
        cur = apply_1q(cur, g->kind, g->wire);
      else
        cur = apply_cnot(cur, std::get<CNot>(op).control,
                         std::get<CNot>(op).target);
      plains.push_back(cur);
    }

    MeasurementPolicy meter = MeasurementPolicy::sampled(rng());
    auto choose = [&rng](int) {
      return AuxSpec{static_cast<int>(rng() & 1u),
                     static_cast<int>(rng() & 1u)};
    };
    run_homomorphic(compiled, cipher, KeyRound{ek, 0}, choose, meter,
                    [&](int op, const StateVector& state, const KeyRound& kr) {
                      const StateVector dec =
                          qotp_decrypt(state, kr.key, wires);
                      worst = std::min(
                          worst,
                          fidelity(dec, plains[static_cast<std::size_t>(op)]));
                    });
  }

  result.passed = worst >= 1.0 - 1e-9;
  result.detail = std::to_string(num_circuits) +
                  " circuits, min prefix fidelity deficit: " +
                  fmt(1.0 - worst);
  return result;
}

SuiteResult check_gf2_linearity(std::uint64_t seed) {
  SuiteResult result{"gf2-key-map", true, ""};
  std::mt19937_64 rng(seed);
  int checked = 0;

  for (int n = 1; n <= 3; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      const Circuit circuit = random_circuit(rng, n, 20, 0, true);
      const HomomorphicCircuit compiled = compile_homomorphic(circuit);
      const CliffordKeyMap map = clifford_key_matrix(circuit);
      if (!gf2_invertible(map)) {
        result.passed = false;
        result.detail = "key map not invertible (n=" + std::to_string(n) + ")";
        return result;
      }

      // Zero must stay fixed: every rule is homogeneous.
      PauliKey zero;
      zero.x.assign(static_cast<std::size_t>(n), 0);
      zero.z.assign(static_cast<std::size_t>(n), 0);
      if (dk_transform(compiled, zero, {}).str() != zero.str()) {
        result.passed = false;
        result.detail = "zero key not fixed";
        return result;
      }

      const int key_bits = 2 * n;
      const std::uint64_t space = std::uint64_t{1} << key_bits;
      const int samples = (n <= 2) ? static_cast<int>(space) : 100;
      for (int s = 0; s < samples; ++s) {
        const std::uint64_t raw =
            (n <= 2) ? static_cast<std::uint64_t>(s) : (rng() & (space - 1));
        PauliKey ek;
        ek.x = index_to_bits(raw >> n, n);
        ek.z = index_to_bits(raw & ((1u << n) - 1), n);
        const PauliKey via_map = apply_key_map(map, ek);
        const PauliKey via_fold = dk_transform(compiled, ek, {});
        if (via_map.str() != via_fold.str()) {
          result.passed = false;
          result.detail = "map/fold mismatch at n=" + std::to_string(n) +
                          " key " + ek.str();
          return result;
        }
        ++checked;
      }
    }
  }
  result.detail = std::to_string(checked) + " keys matched the update fold";
  return result;
}

SuiteResult check_gadget_correctness(std::uint64_t seed,
                                     int plaintexts_per_combo) {
  SuiteResult result{"gadget-correctness", true, ""};
  std::mt19937_64 rng(seed);
  double worst = 1.0;
  int runs = 0;

  for (int dagger = 0; dagger <= 1; ++dagger)
    for (int x = 0; x <= 1; ++x)
      for (int z = 0; z <= 1; ++z)
        for (int y = 0; y <= 1; ++y)
          for (int d = 0; d <= 1; ++d)
            for (int c = 0; c <= 1; ++c)
              for (int rep = 0; rep < plaintexts_per_combo; ++rep) {
                const StateVector psi = random_state(rng, 1);
                PauliKey key;
                key.x = {static_cast<std::uint8_t>(x)};
                key.z = {static_cast<std::uint8_t>(z)};
                const StateVector cipher = qotp_encrypt(psi, key, {1});
                const StateVector aux =
                    prepare_aux(AuxSpec{y, d}, dagger == 1);
                MeasurementPolicy meter = MeasurementPolicy::scripted(
                    {static_cast<std::uint8_t>(c)});
                auto [got_c, out] = run_gadget(cipher, 1, aux,
                                               compute_w(x, y), dagger == 1,
                                               meter);
                const KeyRound next =
                    update_t(KeyRound{key, 0}, 1, TParams{y, d, got_c});
                const StateVector dec = qotp_decrypt(out, next.key, {1});
                const StateVector want = apply_1q(
                    psi, dagger ? GateKind::Tdg : GateKind::T, 1);
                worst = std::min(worst, fidelity(dec, want));
                ++runs;
              }

  result.passed = worst >= 1.0 - 1e-9;
  result.detail = std::to_string(runs) +
                  " gadget runs, max fidelity deficit: " + fmt(1.0 - worst);
  return result;
}

SuiteResult check_toffoli_equivalence() {
  SuiteResult result{"toffoli-decomposition", true, ""};
  const Circuit c = toffoli();
  if (t_count(c) != 7) {
    result.passed = false;
    result.detail = "expected 7 T/Tdg gates, found " +
                    std::to_string(t_count(c));
    return result;
  }

  // Column j of the composed unitary is the circuit applied to |j>.
  std::array<std::array<cdouble, 8>, 8> u{};
  for (int j = 0; j < 8; ++j) {
    const StateVector col =
        simulate_plain(c, new_basis_state(3, index_to_bits(
                                                 static_cast<std::uint64_t>(j),
                                                 3)));
    for (int i = 0; i < 8; ++i)
      u[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          col.amps[static_cast<std::size_t>(i)];
  }

  // Toffoli permutes |110> <-> |111>.
  auto toff = [](int i, int j) {
    const int jj = (j == 6) ? 7 : (j == 7) ? 6 : j;
    return (i == jj) ? 1.0 : 0.0;
  };

  // Align the global phase on the largest entry, then compare entrywise.
  cdouble anchor{0.0, 0.0};
  int ai = 0, aj = 0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      if (std::abs(u[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) >
          std::abs(anchor)) {
        anchor = u[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        ai = i;
        aj = j;
      }
  if (toff(ai, aj) == 0.0) {
    result.passed = false;
    result.detail = "largest amplitude off the Toffoli support";
    return result;
  }
  const cdouble phase = 1.0 / anchor;
  if (std::abs(std::abs(phase) - 1.0) > 1e-10) {
    result.passed = false;
    result.detail = "alignment entry is not unimodular";
    return result;
  }
  double worst = 0.0;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      worst = std::max(
          worst,
          std::abs(phase * u[static_cast<std::size_t>(i)]
                            [static_cast<std::size_t>(j)] -
                   toff(i, j)));
  result.passed = worst <= 1e-10;
  result.detail = "7 T/Tdg gates, max entry deviation: " + fmt(worst);
  return result;
}

std::vector<SuiteResult> run_selftest(std::uint64_t seed) {
  return {
      check_qotp_mixing(),
      check_stepwise_decryption(seed, 100),
      check_gf2_linearity(seed + 1),
      check_gadget_correctness(seed + 2, 20),
      check_toffoli_equivalence(),
  };
}

}  // namespace qhesim
