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

#include "qhesim/key_update.hpp"
#include "qhesim/selftest.hpp"

using namespace qhesim;

namespace {

KeyRound make_round(const char* x, const char* z, int round = 0) {
  return KeyRound{PauliKey{parse_bits(x), parse_bits(z)}, round};
}

}  // namespace

TEST_CASE("clifford key rules") {
  // H swaps the pair on its wire.
  KeyRound kr = update_clifford(make_round("1", "0"), GateKind::H, {1});
  CHECK(kr.key.str() == "x=0 z=1");
  CHECK(kr.round == 1);

  // S folds x into z.
  kr = update_clifford(make_round("1", "1"), GateKind::S, {1});
  CHECK(kr.key.str() == "x=1 z=0");

  // Sdg follows the S rule.
  kr = update_clifford(make_round("1", "1"), GateKind::Sdg, {1});
  CHECK(kr.key.str() == "x=1 z=0");

  // CNOT mixes z into the control and x into the target.
  kr = update_clifford(make_round("10", "01"), GateKind::Cnot, {1, 2});
  CHECK(kr.key.str() == "x=11 z=11");

  // Paulis leave the key alone.
  for (GateKind g : {GateKind::I, GateKind::X, GateKind::Y, GateKind::Z}) {
    kr = update_clifford(make_round("10", "01"), g, {2});
    CHECK(kr.key.str() == "x=10 z=01");
    CHECK(kr.round == 1);
  }

  CHECK_THROWS_AS(update_clifford(make_round("1", "0"), GateKind::T, {1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(update_clifford(make_round("1", "0"), GateKind::Cnot, {1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(update_clifford(make_round("10", "00"), GateKind::H, {3}),
                  std::invalid_argument);
}

TEST_CASE("gadget key rule") {
  KeyRound kr = update_t(make_round("0", "0"), 1, TParams{0, 0, 0});
  CHECK(kr.key.str() == "x=0 z=0");

  kr = update_t(make_round("1", "0"), 1, TParams{0, 0, 0});
  CHECK(kr.key.str() == "x=1 z=1");

  kr = update_t(make_round("1", "1"), 1, TParams{1, 1, 1});
  CHECK(kr.key.str() == "x=0 z=0");

  CHECK_THROWS_AS(update_t(make_round("1", "1"), 2, TParams{}),
                  std::invalid_argument);
}

TEST_CASE("measurement finalization reads the x half") {
  CHECK(finalize_measurement(make_round("11", "01")) == parse_bits("11"));
  CHECK(finalize_measurement(make_round("00", "10")) == parse_bits("00"));
  CHECK(finalize_measurement(make_round("10", "11")) ==
        finalize_measurement(make_round("10", "00")));
}

TEST_CASE("dk_transform folds the circuit") {
  Circuit empty;
  empty.num_wires = 2;
  const PauliKey ek{parse_bits("10"), parse_bits("01")};
  CHECK(dk_transform(compile_homomorphic(empty), ek, {}).str() == ek.str());

  Circuit h;
  h.num_wires = 1;
  h.ops.push_back(Gate1Q{GateKind::H, 1});
  const PauliKey k1{parse_bits("1"), parse_bits("0")};
  CHECK(dk_transform(compile_homomorphic(h), k1, {}).str() == "x=0 z=1");

  // Wrong parameter count is rejected.
  Circuit t;
  t.num_wires = 1;
  t.ops.push_back(Gate1Q{GateKind::T, 1});
  CHECK_THROWS_AS(dk_transform(compile_homomorphic(t), k1, {}),
                  std::invalid_argument);
}

TEST_CASE("search-circuit key fold reaches the recorded dk") {
  // Reference run: ek (x=100, z=110), y=1010110, d=0111001, c=1110111.
  const HomomorphicCircuit compiled =
      compile_homomorphic(build_grover(2, parse_bits("10")));
  REQUIRE(compiled.gadget_count == 7);

  const Bits y = parse_bits("1010110");
  const Bits d = parse_bits("0111001");
  const Bits c = parse_bits("1110111");
  std::vector<TParams> params;
  for (int g = 0; g < 7; ++g)
    params.push_back(TParams{y[static_cast<std::size_t>(g)],
                             d[static_cast<std::size_t>(g)],
                             c[static_cast<std::size_t>(g)]});

  const PauliKey ek{parse_bits("100"), parse_bits("110")};
  const PauliKey dk = dk_transform(compiled, ek, params);
  CHECK(bits_to_string(dk.x).substr(0, 2) == "11");
}

TEST_CASE("key trace checkpoints along the search circuit") {
  const HomomorphicCircuit compiled =
      compile_homomorphic(build_grover(2, parse_bits("10")));
  const Bits y = parse_bits("1010110");
  const Bits d = parse_bits("0111001");
  const Bits c = parse_bits("1110111");

  std::vector<KeyRound> trace;
  KeyRound kr = make_round("100", "110");
  std::size_t gadget = 0;
  for (const auto& op : compiled.ops) {
    if (const auto* g = std::get_if<Gate1Q>(&op))
      kr = update_clifford(kr, g->kind, {g->wire});
    else if (const auto* cn = std::get_if<CNot>(&op))
      kr = update_clifford(kr, GateKind::Cnot, {cn->control, cn->target});
    else {
      const auto& slot = std::get<GadgetSlot>(op);
      kr = update_t(kr, slot.wire,
                    TParams{y[gadget], d[gadget], c[gadget]});
      ++gadget;
    }
    trace.push_back(kr);
  }

  // Round counting: one round per gate or gadget.
  REQUIRE(trace.size() == compiled.ops.size());
  CHECK(trace.back().round == static_cast<int>(compiled.ops.size()));

  // Hand-derived checkpoints for this run.
  CHECK(trace[3].key.str() == "x=101 z=111");   // after the first gadget
  CHECK(trace[14].key.str() == "x=001 z=111");  // after the last gadget
  CHECK(trace[23].key.str() == "x=111 z=111");  // after the diffusion cnot
  CHECK(trace.back().key.str() == "x=111 z=111");

  const std::string rendered = format_key_trace(trace);
  CHECK(rendered.find("r=4 x=101 z=111\n") != std::string::npos);
  CHECK(rendered.find("r=29 x=111 z=111\n") != std::string::npos);
}

TEST_CASE("clifford key map") {
  Circuit empty;
  empty.num_wires = 1;
  const CliffordKeyMap identity = clifford_key_matrix(empty);
  CHECK(identity.rows == std::vector<std::uint64_t>{1, 2});
  CHECK(gf2_invertible(identity));

  Circuit h;
  h.num_wires = 1;
  h.ops.push_back(Gate1Q{GateKind::H, 1});
  const CliffordKeyMap swap = clifford_key_matrix(h);
  CHECK(swap.rows == std::vector<std::uint64_t>{2, 1});

  Circuit t;
  t.num_wires = 1;
  t.ops.push_back(Gate1Q{GateKind::T, 1});
  CHECK_THROWS_AS(clifford_key_matrix(t), std::invalid_argument);
}

TEST_CASE("key map agrees with the fold on random circuits") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 5; ++rep) {
    const Circuit circuit = random_circuit(rng, 3, 20, 0, true);
    const HomomorphicCircuit compiled = compile_homomorphic(circuit);
    const CliffordKeyMap map = clifford_key_matrix(circuit);
    CHECK(gf2_invertible(map));
    for (int s = 0; s < 50; ++s) {
      const PauliKey ek = gen_key(3, rng());
      CHECK(apply_key_map(map, ek).str() ==
            dk_transform(compiled, ek, {}).str());
    }
  }
}

TEST_CASE("key map action is linear") {
  std::mt19937_64 rng(13);
  const Circuit circuit = random_circuit(rng, 2, 15, 0, true);
  const CliffordKeyMap map = clifford_key_matrix(circuit);
  for (int s = 0; s < 20; ++s) {
    const PauliKey a = gen_key(2, rng());
    const PauliKey b = gen_key(2, rng());
    PauliKey sum{xor_bits(a.x, b.x), xor_bits(a.z, b.z)};
    const PauliKey img_a = apply_key_map(map, a);
    const PauliKey img_b = apply_key_map(map, b);
    const PauliKey img_sum = apply_key_map(map, sum);
    CHECK(img_sum.str() ==
          PauliKey{xor_bits(img_a.x, img_b.x), xor_bits(img_a.z, img_b.z)}
              .str());
  }
}

TEST_CASE("zero key is a fixed point of every clifford fold") {
  std::mt19937_64 rng(19);
  for (int rep = 0; rep < 10; ++rep) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const Circuit circuit = random_circuit(rng, n, 25, 0, true);
    PauliKey zero;
    zero.x.assign(static_cast<std::size_t>(n), 0);
    zero.z.assign(static_cast<std::size_t>(n), 0);
    CHECK(dk_transform(compile_homomorphic(circuit), zero, {}).str() ==
          zero.str());
  }
}

TEST_CASE("gf2 key map suite passes") {
  const SuiteResult r = check_gf2_linearity(101);
  CHECK_MESSAGE(r.passed, r.detail);
}
