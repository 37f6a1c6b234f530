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

#include <random>

#include <doctest.h>

#include "qhesim/circuit.hpp"
#include "qhesim/evaluation.hpp"
#include "qhesim/pauli.hpp"
#include "qhesim/selftest.hpp"

using namespace qhesim;

namespace {

StateVector minus_state() {
  return apply_1q(new_basis_state(1, {1}), GateKind::H, 1);
}

StateVector grover_input() {
  return tensor(new_uniform(2), minus_state());
}

}  // namespace

TEST_CASE("parser accepts the line format") {
  const Circuit c = parse_circuit("h 1\ncnot 1 2");
  CHECK(c.num_wires == 2);
  REQUIRE(c.ops.size() == 2);
  CHECK(std::get<Gate1Q>(c.ops[0]).kind == GateKind::H);
  CHECK(std::get<CNot>(c.ops[1]).control == 1);
  CHECK(std::get<CNot>(c.ops[1]).target == 2);

  const Circuit t = parse_circuit("t 1\ntdg 1");
  CHECK(std::get<Gate1Q>(t.ops[0]).kind == GateKind::T);
  CHECK(std::get<Gate1Q>(t.ops[1]).kind == GateKind::Tdg);

  const Circuit commented = parse_circuit("# header\n\n  s 2  # phase\nx 1\n");
  CHECK(commented.num_wires == 2);
  CHECK(commented.ops.size() == 2);
}

TEST_CASE("parser rejects malformed input with line numbers") {
  CHECK_THROWS_AS(parse_circuit("cnot 1 1"), CircuitParseError);
  CHECK_THROWS_AS(parse_circuit("bogus 1"), CircuitParseError);
  CHECK_THROWS_AS(parse_circuit("h"), CircuitParseError);
  CHECK_THROWS_AS(parse_circuit("cnot 1"), CircuitParseError);
  CHECK_THROWS_AS(parse_circuit("h 0"), CircuitParseError);
  CHECK_THROWS_AS(parse_circuit("h 1 2"), CircuitParseError);
  CHECK_THROWS_AS(parse_circuit("# nothing\n"), CircuitParseError);

  try {
    parse_circuit("h 1\nbroken 2\n");
    FAIL("expected a parse error");
  } catch (const CircuitParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("serialization round-trips through the parser") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const Circuit c = random_circuit(rng, n, 15, 4, false);
    if (c.ops.empty()) continue;
    const std::string text = serialize_circuit(c);
    const std::string again = serialize_circuit(parse_circuit(text));
    CHECK(text == again);
  }
}

TEST_CASE("toffoli decomposition") {
  const SuiteResult r = check_toffoli_equivalence();
  CHECK_MESSAGE(r.passed, r.detail);

  const Circuit c = toffoli();
  CHECK(t_count(c) == 7);
  const StateVector flipped =
      simulate_plain(c, new_basis_state(3, {1, 1, 0}));
  CHECK(fidelity(flipped, new_basis_state(3, {1, 1, 1})) > 1.0 - kStateTol);
  const StateVector kept = simulate_plain(c, new_basis_state(3, {1, 0, 0}));
  CHECK(fidelity(kept, new_basis_state(3, {1, 0, 0})) > 1.0 - kStateTol);
}

TEST_CASE("oracle flips only the target branch") {
  const Circuit oracle = build_oracle(2, parse_bits("10"));
  const StateVector marked =
      simulate_plain(oracle, tensor(new_basis_state(2, {1, 0}), minus_state()));
  const cdouble ip = inner_product(
      tensor(new_basis_state(2, {1, 0}), minus_state()), marked);
  CHECK(std::abs(ip + 1.0) < 1e-9);

  const StateVector unmarked =
      simulate_plain(oracle, tensor(new_basis_state(2, {0, 1}), minus_state()));
  const cdouble ip2 = inner_product(
      tensor(new_basis_state(2, {0, 1}), minus_state()), unmarked);
  CHECK(std::abs(ip2 - 1.0) < 1e-9);

  // All-ones target needs no X conjugation.
  int x_gates = 0;
  for (const auto& op : build_oracle(2, parse_bits("11")).ops)
    if (const auto* g = std::get_if<Gate1Q>(&op))
      if (g->kind == GateKind::X) ++x_gates;
  CHECK(x_gates == 0);

  CHECK_THROWS_AS(build_oracle(3, parse_bits("101")), std::invalid_argument);
  CHECK_THROWS_AS(build_oracle(2, parse_bits("1")), std::invalid_argument);
}

TEST_CASE("grover circuit finds every target exactly") {
  for (const char* target : {"00", "01", "10", "11"}) {
    const Bits t = parse_bits(target);
    const Circuit grover = build_grover(2, t);
    const StateVector out = simulate_plain(grover, grover_input());
    const auto dist = outcome_distribution(out, {1, 2});
    REQUIRE(dist.count(target) == 1);
    CHECK(dist.at(target) == doctest::Approx(1.0).epsilon(1e-9));

    // The oracle qubit ends where it started: |-> on the last wire.
    CHECK(equal_up_to_global_phase(
        out, tensor(new_basis_state(2, t), minus_state()), 1e-9));
  }
}

TEST_CASE("homomorphic compilation rewrites T gates in place") {
  const Circuit clifford_only = parse_circuit("h 1\ncnot 1 2\ns 2");
  const HomomorphicCircuit hc = compile_homomorphic(clifford_only);
  CHECK(hc.gadget_count == 0);
  CHECK(hc.ops.size() == clifford_only.ops.size());

  const Circuit mixed = parse_circuit("t 1\nh 1\ntdg 2");
  const HomomorphicCircuit hm = compile_homomorphic(mixed);
  CHECK(hm.gadget_count == 2);
  REQUIRE(hm.ops.size() == 3);
  CHECK(std::get<GadgetSlot>(hm.ops[0]).wire == 1);
  CHECK_FALSE(std::get<GadgetSlot>(hm.ops[0]).dagger);
  CHECK(std::get<Gate1Q>(hm.ops[1]).kind == GateKind::H);
  CHECK(std::get<GadgetSlot>(hm.ops[2]).wire == 2);
  CHECK(std::get<GadgetSlot>(hm.ops[2]).dagger);

  CHECK(compile_homomorphic(build_grover(2, parse_bits("10"))).gadget_count ==
        7);
}

TEST_CASE("plain simulation") {
  Circuit empty;
  empty.num_wires = 2;
  const StateVector in = new_uniform(2);
  CHECK(fidelity(simulate_plain(empty, in), in) > 1.0 - kStateTol);

  const StateVector one =
      simulate_plain(parse_circuit("x 1"), new_basis_state(1, {0}));
  CHECK(fidelity(one, new_basis_state(1, {1})) > 1.0 - kStateTol);

  CHECK_THROWS_AS(simulate_plain(parse_circuit("x 1"), new_uniform(2)),
                  std::invalid_argument);

  Circuit with_slot;
  with_slot.num_wires = 1;
  with_slot.ops.push_back(GadgetSlot{1, false});
  CHECK_THROWS_AS(simulate_plain(with_slot, new_basis_state(1, {0})),
                  std::invalid_argument);
}

TEST_CASE("embedding shifts wires") {
  const Circuit c = parse_circuit("h 1\ncnot 1 2");
  const Circuit shifted = embed(c, 1, 3);
  CHECK(shifted.num_wires == 3);
  CHECK(std::get<Gate1Q>(shifted.ops[0]).wire == 2);
  CHECK(std::get<CNot>(shifted.ops[1]).control == 2);
  CHECK(std::get<CNot>(shifted.ops[1]).target == 3);
  CHECK_THROWS_AS(embed(c, 2, 3), std::invalid_argument);
}

TEST_CASE("zero-key homomorphic run matches plain simulation") {
  std::mt19937_64 rng(29);
  for (int rep = 0; rep < 25; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const int gates = 1 + static_cast<int>(rng() % 30);
    const Circuit circuit = random_circuit(rng, n, gates, 6, false);
    const HomomorphicCircuit compiled = compile_homomorphic(circuit);

    const StateVector input = random_state(rng, n);
    PauliKey zero;
    zero.x.assign(static_cast<std::size_t>(n), 0);
    zero.z.assign(static_cast<std::size_t>(n), 0);

    MeasurementPolicy meter = MeasurementPolicy::sampled(rng());
    auto zero_aux = [](int) { return AuxSpec{0, 0}; };
    const HomomorphicRun run = run_homomorphic(compiled, input,
                                               KeyRound{zero, 0}, zero_aux,
                                               meter);

    std::vector<int> wires;
    for (int w = 1; w <= n; ++w) wires.push_back(w);
    const StateVector dec = qotp_decrypt(run.state, run.key.key, wires);
    CHECK(fidelity(dec, simulate_plain(circuit, input)) >= 1.0 - 1e-9);
    CHECK(run.key.round == static_cast<int>(compiled.ops.size()));
  }
}
