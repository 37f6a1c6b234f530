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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qhesim/circuit.hpp"
#include "qhesim/gadget.hpp"
#include "qhesim/key_update.hpp"
#include "qhesim/pauli.hpp"

namespace qhesim {

// The four roles: Alice owns the data, Bob evaluates, Carol is the trusted
// key center of the blind search, Dave is the key searcher of the compact
// Clifford protocol.
enum class Party { Alice, Bob, Carol, Dave };

std::string_view party_name(Party p);

struct InputLength {
  int n = 0;
};
struct SharedBits {
  Bits bits;
};
struct EncState {
  StateVector state;
};
struct AuxQubit {
  StateVector qubit;
};
struct WBit {
  int bit = 0;
};
struct CBit {
  int bit = 0;
};
struct EncResult {
  Bits bits;
};
struct EncDk {
  Bits bits;
};
struct KappaPrime {
  StateVector state;
};
// A (ek, dk) pair in transit; the stored bits are OTP-padded with a
// BB84-agreed pad, never the raw keys.
struct KeyPair {
  Bits ek;
  Bits dk;
};

using Payload = std::variant<InputLength, SharedBits, EncState, AuxQubit,
                             WBit, CBit, EncResult, EncDk, KappaPrime, KeyPair>;

std::string_view payload_kind(const Payload& p);
std::string payload_summary(const Payload& p);

struct Message {
  Party sender;
  Party receiver;
  Payload payload;
};

// Ordered message log of a protocol run; deterministic for fixed seeds,
// scripts and forced keys.
struct Transcript {
  std::vector<Message> messages;

  void add(Party sender, Party receiver, Payload payload);
  void append(Transcript other);
  // One line per message: "step=<k> <sender>-><receiver> <kind> <summary>".
  std::string str() const;
};

// Structural blindness check for the search protocol: the evaluator may only
// ever receive the encrypted state, auxiliary qubits and w bits. Key
// material (ek, sk, dk, y, d) must never reach him.
bool evaluator_sees_only_blind_payloads(const Transcript& transcript);

struct Bb84Result {
  Bits bits;  // the sifted string, identical on both sides
  Transcript transcript;
};

// Idealized BB84 over the four states |+>, |->, |+_y>, |-_y> (|+>, |+_y>
// encode 0; |->, |-_y> encode 1): the sender transmits encoded qubits, the
// receiver measures in random bases, matching-basis rounds are sifted until
// num_bits bits are agreed. Noiseless channel, no eavesdropper.
Bb84Result bb84_exchange(int num_bits, std::uint64_t seed,
                         Party sender = Party::Carol,
                         Party receiver = Party::Alice);

struct Protocol1Options {
  int m = 2;      // search-register width; the builders support m = 2
  Bits target;    // length m
  std::uint64_t seed = 0;
  // Replay hooks: force the gadget measurement bits, the encryption key
  // (over m+1 wires, oracle bits zero) and the per-gadget (y, d) strings.
  std::optional<Bits> scripted_c;
  std::optional<PauliKey> forced_ek;
  std::optional<std::pair<Bits, Bits>> forced_yd;
};

struct Protocol1Result {
  PauliKey ek;  // over m+1 wires; the oracle wire carries zero bits
  Bits sk;
  Bits y, d, c;  // one bit per gadget, in circuit order
  Bits encrypted_result;
  Bits dk;
  Bits decrypted;
  bool verified = false;
  int rounds = 0;
  std::vector<GadgetRecord> gadgets;
  Transcript transcript;
};

// Blind Grover search for `target` among the 2^m basis items: Alice
// encrypts her superposed register, Bob evaluates the compiled search
// circuit gadget by gadget, Carol feeds auxiliary qubits / w bits and
// evolves the key, and Alice decrypts the measured outcome.
Protocol1Result run_protocol1(const Protocol1Options& options);

// The superposition of all (encryption key, decryption key) pairs of a
// Clifford circuit on n wires: a 4n-wire state, uniform over j on the first
// 2n wires with the last 2n wires holding the mapped key of j on each
// branch. Key bits are laid out x(1..n) then z(1..n).
StateVector build_kappa_prime(const Circuit& circuit, int n);

// floor(pi/4 * 2^n): Grover iteration count for one marked item among 2^2n.
int grover_iterations(int n);

// Amplitude amplification of the branches whose first 2n wires equal
// ek_bits: iterates (reflection about kappa_prime) * (prefix sign flip).
StateVector grover_amplify(const StateVector& kappa_prime, const Bits& ek_bits,
                           int iterations);

// Probability that the leading wires read the given prefix.
double prefix_probability(const StateVector& state, const Bits& prefix);

struct KeySearchResult {
  Bits ek;
  Bits dk;
  int attempts = 0;
};

// Dave's task: amplify, measure all wires, and keep the (ek, dk) pair iff
// the measured prefix equals the wanted key; otherwise remeasure a fresh
// amplified copy, up to max_attempts.
KeySearchResult dave_key_search(const StateVector& kappa_prime,
                                const PauliKey& ek, std::uint64_t seed,
                                int max_attempts = 16);

struct Protocol2Result {
  StateVector output;
  Transcript transcript;
  PauliKey ek;
  PauliKey dk;
  int search_attempts = 0;
};

// Compact homomorphic evaluation of a Clifford circuit: Alice encrypts the
// last n wires of plain_input, Bob evaluates the circuit on the cipher state
// and builds the key-pair superposition, Dave searches out (ek, dk) and
// returns it OTP-padded under a BB84-agreed pad, Alice decrypts. Wires
// before the last n (if any) are untouched index wires. The output equals
// the plain evaluation up to a global phase.
Protocol2Result run_protocol2(const Circuit& circuit,
                              const StateVector& plain_input, int n,
                              std::uint64_t seed);

}  // namespace qhesim
