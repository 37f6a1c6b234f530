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

#include "qhesim/protocol.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qhesim {

namespace {

// splitmix64 step; decorrelates per-party generators derived from one seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + salt * 0x9e3779b97f4a7c15ULL + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int draw_bit(std::mt19937_64& rng) { return static_cast<int>(rng() & 1u); }

Bits key_to_bits(const PauliKey& key) {
  Bits out = key.x;
  out.insert(out.end(), key.z.begin(), key.z.end());
  return out;
}

PauliKey bits_to_key(const Bits& bits) {
  if (bits.size() % 2 != 0)
    throw std::invalid_argument("packed key must have even length");
  const std::size_t n = bits.size() / 2;
  PauliKey key;
  key.x.assign(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(n));
  key.z.assign(bits.begin() + static_cast<std::ptrdiff_t>(n), bits.end());
  return key;
}

}  // namespace

std::string_view party_name(Party p) {
  switch (p) {
    case Party::Alice: return "alice";
    case Party::Bob: return "bob";
    case Party::Carol: return "carol";
    case Party::Dave: return "dave";
  }
  throw std::logic_error("unknown party");
}

std::string_view payload_kind(const Payload& p) {
  struct Visitor {
    std::string_view operator()(const InputLength&) { return "input-length"; }
    std::string_view operator()(const SharedBits&) { return "shared-bits"; }
    std::string_view operator()(const EncState&) { return "enc-state"; }
    std::string_view operator()(const AuxQubit&) { return "aux-qubit"; }
    std::string_view operator()(const WBit&) { return "w-bit"; }
    std::string_view operator()(const CBit&) { return "c-bit"; }
    std::string_view operator()(const EncResult&) { return "enc-result"; }
    std::string_view operator()(const EncDk&) { return "enc-dk"; }
    std::string_view operator()(const KappaPrime&) { return "kappa-prime"; }
    std::string_view operator()(const KeyPair&) { return "key-pair"; }
  };
  return std::visit(Visitor{}, p);
}

std::string payload_summary(const Payload& p) {
  struct Visitor {
    std::string operator()(const InputLength& v) {
      return "n=" + std::to_string(v.n);
    }
    std::string operator()(const SharedBits& v) {
      return "bits=" + bits_to_string(v.bits);
    }
    std::string operator()(const EncState& v) {
      return "wires=" + std::to_string(v.state.num_wires);
    }
    std::string operator()(const AuxQubit& v) {
      return "wires=" + std::to_string(v.qubit.num_wires);
    }
    std::string operator()(const WBit& v) { return "w=" + std::to_string(v.bit); }
    std::string operator()(const CBit& v) { return "c=" + std::to_string(v.bit); }
    std::string operator()(const EncResult& v) {
      return "bits=" + bits_to_string(v.bits);
    }
    std::string operator()(const EncDk& v) {
      return "bits=" + bits_to_string(v.bits);
    }
    std::string operator()(const KappaPrime& v) {
      return "wires=" + std::to_string(v.state.num_wires);
    }
    std::string operator()(const KeyPair& v) {
      return "otp-ek=" + bits_to_string(v.ek) +
             " otp-dk=" + bits_to_string(v.dk);
    }
  };
  return std::visit(Visitor{}, p);
}

void Transcript::add(Party sender, Party receiver, Payload payload) {
  messages.push_back(Message{sender, receiver, std::move(payload)});
}

void Transcript::append(Transcript other) {
  for (auto& m : other.messages) messages.push_back(std::move(m));
}

std::string Transcript::str() const {
  std::string out;
  for (std::size_t k = 0; k < messages.size(); ++k) {
    const auto& m = messages[k];
    out += "step=" + std::to_string(k + 1) + " " +
           std::string(party_name(m.sender)) + "→" +
           std::string(party_name(m.receiver)) + " " +
           std::string(payload_kind(m.payload)) + " " +
           payload_summary(m.payload) + "\n";
  }
  return out;
}

bool evaluator_sees_only_blind_payloads(const Transcript& transcript) {
  for (const auto& m : transcript.messages) {
    if (m.receiver != Party::Bob) continue;
    const bool blind = std::holds_alternative<EncState>(m.payload) ||
                       std::holds_alternative<AuxQubit>(m.payload) ||
                       std::holds_alternative<WBit>(m.payload);
    if (!blind) return false;
  }
  return true;
}

Bb84Result bb84_exchange(int num_bits, std::uint64_t seed, Party sender,
                         Party receiver) {
  if (num_bits < 1)
    throw std::invalid_argument("bb84 needs a positive bit count");

  std::mt19937_64 sender_rng(mix_seed(seed, 0x5e17de5));
  std::mt19937_64 receiver_rng(mix_seed(seed, 0x3ece17e));
  MeasurementPolicy meter =
      MeasurementPolicy::sampled(mix_seed(seed, 0x3ea52e));

  Bb84Result result;
  while (static_cast<int>(result.bits.size()) < num_bits) {
    const int bit = draw_bit(sender_rng);
    const int send_basis = draw_bit(sender_rng);  // 0 = X basis, 1 = Y basis
    // Basis bit selects the S phase, value bit the Z phase: exactly the four
    // candidate states.
    const StateVector qubit = prepare_aux(AuxSpec{send_basis, bit});
    result.transcript.add(sender, receiver, AuxQubit{qubit});

    const int recv_basis = draw_bit(receiver_rng);
    StateVector rotated = qubit;
    if (recv_basis) rotated = apply_1q(rotated, GateKind::Sdg, 1);
    rotated = apply_1q(rotated, GateKind::H, 1);
    const auto [measured, collapsed] = measure_wire(rotated, 1, meter);
    (void)collapsed;

    // Public sifting: receiver announces the basis, sender answers whether
    // it matched. Bit values never travel.
    result.transcript.add(receiver, sender,
                          SharedBits{{static_cast<std::uint8_t>(recv_basis)}});
    const bool match = recv_basis == send_basis;
    result.transcript.add(sender, receiver,
                          SharedBits{{static_cast<std::uint8_t>(match)}});
    if (!match) continue;
    if (measured != bit)
      throw std::logic_error("bb84 bases matched but bits disagree");
    result.bits.push_back(static_cast<std::uint8_t>(bit));
  }
  return result;
}

Protocol1Result run_protocol1(const Protocol1Options& options) {
  const int m = options.m;
  if (static_cast<int>(options.target.size()) != m)
    throw std::invalid_argument("target length must equal m");
  const int data_wires = m;       // the encrypted search register
  const int total_wires = m + 1;  // plus the oracle wire
  const int oracle_wire = total_wires;

  const Circuit grover = build_grover(m, options.target);
  const HomomorphicCircuit compiled = compile_homomorphic(grover);
  const int gadgets = compiled.gadget_count;

  if (options.scripted_c &&
      static_cast<int>(options.scripted_c->size()) != gadgets)
    throw std::invalid_argument(
        "script length " + std::to_string(options.scripted_c->size()) +
        " != " + std::to_string(gadgets) + " gadgets");
  if (options.forced_yd) {
    if (static_cast<int>(options.forced_yd->first.size()) != gadgets ||
        static_cast<int>(options.forced_yd->second.size()) != gadgets)
      throw std::invalid_argument("forced y/d must carry one bit per gadget");
  }

  Protocol1Result result;
  Transcript& tr = result.transcript;

  // Step 1: Alice announces the cipher-register length.
  tr.add(Party::Alice, Party::Carol, InputLength{data_wires});

  // Step 2: Alice and Carol agree on 3n random bits; the first 2n form ek,
  // the rest form sk. A forced ek replays a recorded run, so the quantum
  // rounds are skipped and the agreed string is logged directly.
  std::mt19937_64 carol_rng(mix_seed(options.seed, 0xca201));
  PauliKey ek;  // over total_wires; oracle bits stay zero
  Bits sk;
  if (options.forced_ek) {
    ek = *options.forced_ek;
    if (ek.num_wires() != total_wires)
      throw std::invalid_argument("forced ek must cover " +
                                  std::to_string(total_wires) + " wires");
    if (ek.x[static_cast<std::size_t>(oracle_wire - 1)] ||
        ek.z[static_cast<std::size_t>(oracle_wire - 1)])
      throw std::invalid_argument("the oracle wire is never encrypted; its "
                                  "key bits must be zero");
    for (int i = 0; i < data_wires; ++i)
      sk.push_back(static_cast<std::uint8_t>(draw_bit(carol_rng)));
    Bits agreed;
    for (int i = 0; i < data_wires; ++i)
      agreed.push_back(ek.x[static_cast<std::size_t>(i)]);
    for (int i = 0; i < data_wires; ++i)
      agreed.push_back(ek.z[static_cast<std::size_t>(i)]);
    agreed.insert(agreed.end(), sk.begin(), sk.end());
    tr.add(Party::Carol, Party::Alice, SharedBits{agreed});
  } else {
    Bb84Result bb84 = bb84_exchange(3 * data_wires,
                                    mix_seed(options.seed, 0xbb84), Party::Carol,
                                    Party::Alice);
    tr.append(std::move(bb84.transcript));
    ek.x.assign(static_cast<std::size_t>(total_wires), 0);
    ek.z.assign(static_cast<std::size_t>(total_wires), 0);
    for (int i = 0; i < data_wires; ++i) {
      ek.x[static_cast<std::size_t>(i)] = bb84.bits[static_cast<std::size_t>(i)];
      ek.z[static_cast<std::size_t>(i)] =
          bb84.bits[static_cast<std::size_t>(data_wires + i)];
    }
    sk.assign(bb84.bits.begin() + 2 * data_wires, bb84.bits.end());
  }
  result.ek = ek;
  result.sk = sk;

  // Step 3: Alice prepares the uniform register with the |-> oracle qubit,
  // encrypts, and hands the cipher state to Bob.
  Bits prep(static_cast<std::size_t>(total_wires), 0);
  prep[static_cast<std::size_t>(oracle_wire - 1)] = 1;
  StateVector plain = new_basis_state(total_wires, prep);
  for (int w = 1; w <= total_wires; ++w) plain = apply_1q(plain, GateKind::H, w);

  std::vector<int> all_wires(static_cast<std::size_t>(total_wires));
  for (int w = 1; w <= total_wires; ++w)
    all_wires[static_cast<std::size_t>(w - 1)] = w;
  StateVector cipher = qotp_encrypt(plain, ek, all_wires);
  tr.add(Party::Alice, Party::Bob, EncState{cipher});

  // Step 4: Bob runs the compiled circuit; Carol tracks the key. Each gadget
  // is one aux-qubit + w-bit delivery and one c-bit reply.
  MeasurementPolicy gadget_meter =
      options.scripted_c
          ? MeasurementPolicy::scripted(*options.scripted_c)
          : MeasurementPolicy::sampled(mix_seed(options.seed, 0xb0b));
  KeyRound kr{ek, 0};
  int gadget_index = 0;
  for (const auto& op : compiled.ops) {
    if (const auto* g = std::get_if<Gate1Q>(&op)) {
      cipher = apply_1q(cipher, g->kind, g->wire);
      kr = update_clifford(kr, g->kind, {g->wire});
    } else if (const auto* cn = std::get_if<CNot>(&op)) {
      cipher = apply_cnot(cipher, cn->control, cn->target);
      kr = update_clifford(kr, GateKind::Cnot, {cn->control, cn->target});
    } else {
      const auto& slot = std::get<GadgetSlot>(op);
      AuxSpec spec;
      if (options.forced_yd) {
        spec.y = options.forced_yd->first[static_cast<std::size_t>(gadget_index)];
        spec.d = options.forced_yd->second[static_cast<std::size_t>(gadget_index)];
      } else {
        spec.y = draw_bit(carol_rng);
        spec.d = draw_bit(carol_rng);
      }
      const StateVector aux = prepare_aux(spec, slot.dagger);
      const int w =
          compute_w(kr.key.x[static_cast<std::size_t>(slot.wire - 1)], spec.y);
      tr.add(Party::Carol, Party::Bob, AuxQubit{aux});
      tr.add(Party::Carol, Party::Bob, WBit{w});

      auto [c, next] = run_gadget(cipher, slot.wire, aux, w, slot.dagger,
                                  gadget_meter);
      cipher = std::move(next);
      tr.add(Party::Bob, Party::Carol, CBit{c});
      kr = update_t(kr, slot.wire, TParams{spec.y, spec.d, c});

      result.gadgets.push_back(
          GadgetRecord{slot.wire, slot.dagger, spec.y, spec.d, w, c});
      result.y.push_back(static_cast<std::uint8_t>(spec.y));
      result.d.push_back(static_cast<std::uint8_t>(spec.d));
      result.c.push_back(static_cast<std::uint8_t>(c));
      ++gadget_index;
    }
  }
  result.rounds = kr.round;

  // Step 5: Bob measures the search register and reports the (encrypted)
  // outcome; Carol finalizes dk and sends it to Alice under the classical
  // pad.
  MeasurementPolicy final_meter =
      MeasurementPolicy::sampled(mix_seed(options.seed, 0xf19a1));
  std::vector<int> data_list(static_cast<std::size_t>(data_wires));
  for (int w = 1; w <= data_wires; ++w)
    data_list[static_cast<std::size_t>(w - 1)] = w;
  auto [outcome, after] = measure_register(cipher, data_list, final_meter);
  (void)after;
  result.encrypted_result = outcome;
  tr.add(Party::Bob, Party::Alice, EncResult{outcome});

  const Bits dk_all = finalize_measurement(kr);
  Bits dk(dk_all.begin(), dk_all.begin() + data_wires);
  tr.add(Party::Carol, Party::Alice, EncDk{otp_xor(dk, ClassicalPad{sk})});

  // Step 6: Alice unpads dk, decrypts the outcome and checks it against her
  // search condition.
  const auto& enc_dk = std::get<EncDk>(tr.messages.back().payload).bits;
  result.dk = otp_xor(enc_dk, ClassicalPad{sk});
  result.decrypted = classical_decrypt(result.encrypted_result, result.dk);
  result.verified = result.decrypted == options.target;

  // Every run ends with the structural blindness check on its transcript.
  if (!evaluator_sees_only_blind_payloads(result.transcript))
    throw std::logic_error("key material reached the evaluator");
  return result;
}

StateVector build_kappa_prime(const Circuit& circuit, int n) {
  if (circuit.num_wires != n)
    throw std::invalid_argument("circuit must span exactly the n encrypted "
                                "wires");
  if (n < 1 || n > 3)
    throw std::invalid_argument("key superposition supported for n <= 3");
  if (!is_clifford_circuit(circuit))
    throw std::invalid_argument("key superposition exists only for Clifford "
                                "circuits");

  const CliffordKeyMap map = clifford_key_matrix(circuit);
  const int key_bits = 2 * n;
  StateVector kappa;
  kappa.num_wires = 2 * key_bits;
  kappa.amps.assign(std::size_t{1} << kappa.num_wires, cdouble{0.0, 0.0});
  const double amp = 1.0 / static_cast<double>(std::size_t{1} << n);
  for (std::uint64_t j = 0; j < (std::uint64_t{1} << key_bits); ++j) {
    const PauliKey ek = bits_to_key(index_to_bits(j, key_bits));
    const std::uint64_t dk = bits_to_index(key_to_bits(apply_key_map(map, ek)));
    kappa.amps[(j << key_bits) | dk] = amp;
  }
  return kappa;
}

int grover_iterations(int n) {
  return static_cast<int>(
      std::floor(std::numbers::pi / 4.0 * static_cast<double>(1 << n)));
}

StateVector grover_amplify(const StateVector& kappa_prime, const Bits& ek_bits,
                           int iterations) {
  const int key_bits = static_cast<int>(ek_bits.size());
  if (kappa_prime.num_wires != 2 * key_bits)
    throw std::invalid_argument("key register width does not match the state");
  const int suffix_bits = kappa_prime.num_wires - key_bits;
  const std::uint64_t wanted = bits_to_index(ek_bits);

  StateVector state = kappa_prime;
  for (int it = 0; it < iterations; ++it) {
    // Oracle: flip the sign of every branch whose leading wires equal ek.
    for (std::uint64_t i = 0; i < state.dim(); ++i)
      if ((i >> suffix_bits) == wanted) state.amps[i] = -state.amps[i];
    // Diffusion: reflect about the initial superposition.
    const cdouble overlap = inner_product(kappa_prime, state);
    for (std::uint64_t i = 0; i < state.dim(); ++i)
      state.amps[i] = 2.0 * overlap * kappa_prime.amps[i] - state.amps[i];
  }
  return state;
}

double prefix_probability(const StateVector& state, const Bits& prefix) {
  const int suffix_bits = state.num_wires - static_cast<int>(prefix.size());
  if (suffix_bits < 0)
    throw std::invalid_argument("prefix longer than the register");
  const std::uint64_t wanted = bits_to_index(prefix);
  double p = 0.0;
  for (std::uint64_t i = 0; i < state.dim(); ++i)
    if ((i >> suffix_bits) == wanted) p += std::norm(state.amps[i]);
  return p;
}

KeySearchResult dave_key_search(const StateVector& kappa_prime,
                                const PauliKey& ek, std::uint64_t seed,
                                int max_attempts) {
  const Bits ek_bits = key_to_bits(ek);
  const int n = ek.num_wires();
  const StateVector amplified =
      grover_amplify(kappa_prime, ek_bits, grover_iterations(n));

  std::vector<int> all_wires(static_cast<std::size_t>(amplified.num_wires));
  for (int w = 1; w <= amplified.num_wires; ++w)
    all_wires[static_cast<std::size_t>(w - 1)] = w;

  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    MeasurementPolicy meter = MeasurementPolicy::sampled(
        mix_seed(seed, 0xda0e + static_cast<std::uint64_t>(attempt)));
    auto [bits, rest] = measure_register(amplified, all_wires, meter);
    (void)rest;
    Bits prefix(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(ek_bits.size()));
    if (prefix == ek_bits) {
      Bits suffix(bits.begin() + static_cast<std::ptrdiff_t>(ek_bits.size()),
                  bits.end());
      return KeySearchResult{prefix, suffix, attempt};
    }
  }
  throw std::runtime_error("key search failed after " +
                           std::to_string(max_attempts) + " attempts");
}

Protocol2Result run_protocol2(const Circuit& circuit,
                              const StateVector& plain_input, int n,
                              std::uint64_t seed) {
  if (!is_clifford_circuit(circuit))
    throw std::invalid_argument("the compact protocol evaluates Clifford "
                                "circuits only");
  if (circuit.num_wires != n)
    throw std::invalid_argument("circuit must span exactly the n encrypted "
                                "wires");
  if (plain_input.num_wires < n)
    throw std::invalid_argument("input needs at least n wires");
  const int index_wires = plain_input.num_wires - n;

  Protocol2Result result;
  Transcript& tr = result.transcript;

  // Steps 1-2: Alice picks ek and sends the cipher state.
  result.ek = gen_key(n, mix_seed(seed, 0xa11ce));
  std::vector<int> data_list(static_cast<std::size_t>(n));
  for (int w = 1; w <= n; ++w)
    data_list[static_cast<std::size_t>(w - 1)] = index_wires + w;
  const StateVector cipher = qotp_encrypt(plain_input, result.ek, data_list);
  tr.add(Party::Alice, Party::Bob, EncState{cipher});
  tr.add(Party::Alice, Party::Bob, InputLength{n});

  // Steps 3-4: Bob evaluates the circuit on the cipher state and builds the
  // key-pair superposition.
  const StateVector evaluated = simulate_plain(
      embed(circuit, index_wires, plain_input.num_wires), cipher);
  const StateVector kappa = build_kappa_prime(circuit, n);
  tr.add(Party::Bob, Party::Alice, EncState{evaluated});
  tr.add(Party::Bob, Party::Alice, KappaPrime{kappa});

  // Steps 5-6: Alice forwards the superposition and her ek to Dave.
  tr.add(Party::Alice, Party::Dave, KappaPrime{kappa});
  tr.add(Party::Alice, Party::Dave, SharedBits{key_to_bits(result.ek)});

  // Step 7: Dave searches out the pair and returns it OTP-padded under a
  // BB84-agreed pad.
  const KeySearchResult search =
      dave_key_search(kappa, result.ek, mix_seed(seed, 0xdae));
  result.search_attempts = search.attempts;

  Bb84Result pad_agreement = bb84_exchange(
      static_cast<int>(search.ek.size() + search.dk.size()),
      mix_seed(seed, 0xbb84da), Party::Dave, Party::Alice);
  tr.append(std::move(pad_agreement.transcript));
  const Bits& pad = pad_agreement.bits;
  Bits padded_ek(search.ek), padded_dk(search.dk);
  for (std::size_t i = 0; i < padded_ek.size(); ++i) padded_ek[i] ^= pad[i];
  for (std::size_t i = 0; i < padded_dk.size(); ++i)
    padded_dk[i] ^= pad[padded_ek.size() + i];
  tr.add(Party::Dave, Party::Alice, KeyPair{padded_ek, padded_dk});

  // Step 8: Alice unpads the pair, checks it is hers, and decrypts.
  Bits recv_ek = padded_ek, recv_dk = padded_dk;
  for (std::size_t i = 0; i < recv_ek.size(); ++i) recv_ek[i] ^= pad[i];
  for (std::size_t i = 0; i < recv_dk.size(); ++i)
    recv_dk[i] ^= pad[recv_ek.size() + i];
  if (recv_ek != key_to_bits(result.ek))
    throw std::logic_error("key searcher returned a foreign key pair");
  result.dk = bits_to_key(recv_dk);
  result.output = qotp_decrypt(evaluated, result.dk, data_list);
  return result;
}

}  // namespace qhesim
