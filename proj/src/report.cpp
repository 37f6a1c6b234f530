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

#include "qhesim/report.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace qhesim {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string hexfloat(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%a", v);
  return buf;
}

json amplitudes_to_json(const StateVector& state) {
  json amps = json::array();
  for (const auto& a : state.amps)
    amps.push_back({{"re", hexfloat(a.real())}, {"im", hexfloat(a.imag())}});
  return {{"wires", state.num_wires}, {"amplitudes", std::move(amps)}};
}

json state_summary(const StateVector& state) {
  return {{"wires", state.num_wires}};
}

json payload_to_json(const Payload& payload, bool with_amplitudes) {
  json j;
  j["kind"] = std::string(payload_kind(payload));
  struct Visitor {
    json& j;
    bool amps;
    void operator()(const InputLength& v) { j["n"] = v.n; }
    void operator()(const SharedBits& v) { j["bits"] = bits_to_string(v.bits); }
    void operator()(const EncState& v) {
      j["state"] = amps ? amplitudes_to_json(v.state) : state_summary(v.state);
    }
    void operator()(const AuxQubit& v) {
      j["state"] = amps ? amplitudes_to_json(v.qubit) : state_summary(v.qubit);
    }
    void operator()(const WBit& v) { j["w"] = v.bit; }
    void operator()(const CBit& v) { j["c"] = v.bit; }
    void operator()(const EncResult& v) { j["bits"] = bits_to_string(v.bits); }
    void operator()(const EncDk& v) { j["bits"] = bits_to_string(v.bits); }
    void operator()(const KappaPrime& v) {
      j["state"] = amps ? amplitudes_to_json(v.state) : state_summary(v.state);
    }
    void operator()(const KeyPair& v) {
      j["otp_ek"] = bits_to_string(v.ek);
      j["otp_dk"] = bits_to_string(v.dk);
    }
  };
  std::visit(Visitor{j, with_amplitudes}, payload);
  return j;
}

ordered_json report_to_json(const RunReport& r) {
  ordered_json j;
  j["mode"] = r.mode;
  j["seed"] = r.seed;
  j["parameters"] = {{"ek", r.ek}, {"y", r.y}, {"d", r.d}, {"c", r.c}};
  j["encrypted_result"] = r.encrypted_result;
  j["dk"] = r.dk;
  j["decrypted"] = r.decrypted;
  j["verified"] = r.verified;
  j["elapsed_ms"] = r.elapsed_ms;
  if (r.fidelity) j["fidelity"] = *r.fidelity;
  if (r.attempts) j["attempts"] = *r.attempts;
  return j;
}

}  // namespace

RunReport report_from_protocol1(const Protocol1Result& run, std::uint64_t seed,
                                double elapsed_ms) {
  RunReport r;
  r.mode = "search";
  r.seed = seed;
  r.ek = bits_to_string(run.ek.x) + bits_to_string(run.ek.z);
  r.y = bits_to_string(run.y);
  r.d = bits_to_string(run.d);
  r.c = bits_to_string(run.c);
  r.encrypted_result = bits_to_string(run.encrypted_result);
  r.dk = bits_to_string(run.dk);
  r.decrypted = bits_to_string(run.decrypted);
  r.verified = run.verified;
  r.elapsed_ms = elapsed_ms;
  return r;
}

std::string reports_to_json(const std::vector<RunReport>& rows) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rows) arr.push_back(report_to_json(r));
  return arr.dump(2) + "\n";
}

std::string reports_to_table(const std::vector<RunReport>& rows) {
  // Column order mirrors the reference presentation: keys and parameters
  // first, then the encrypted outcome, the decryption key and the result.
  std::ostringstream os;
  os << std::left << std::setw(14) << "ek" << std::setw(9) << "y"
     << std::setw(9) << "d" << std::setw(9) << "c" << std::setw(11) << "enc"
     << std::setw(9) << "dk" << std::setw(11) << "decrypted" << std::setw(9)
     << "verified" << "\n";
  for (const auto& r : rows)
    os << std::left << std::setw(14) << r.ek << std::setw(9) << r.y
       << std::setw(9) << r.d << std::setw(9) << r.c << std::setw(11)
       << r.encrypted_result << std::setw(9) << r.dk << std::setw(11)
       << r.decrypted << std::setw(9) << (r.verified ? "yes" : "no") << "\n";
  return os.str();
}

std::string reports_to_csv(const std::vector<RunReport>& rows) {
  std::ostringstream os;
  os << "mode,seed,ek,y,d,c,encrypted_result,dk,decrypted,verified,"
        "elapsed_ms,fidelity,attempts\n";
  for (const auto& r : rows) {
    os << r.mode << ',' << r.seed << ',' << r.ek << ',' << r.y << ',' << r.d
       << ',' << r.c << ',' << r.encrypted_result << ',' << r.dk << ','
       << r.decrypted << ',' << (r.verified ? "true" : "false") << ','
       << r.elapsed_ms << ',';
    if (r.fidelity) os << std::setprecision(17) << *r.fidelity;
    os << ',';
    if (r.attempts) os << *r.attempts;
    os << '\n';
  }
  return os.str();
}

std::string transcript_to_json(const Transcript& transcript,
                               bool with_amplitudes) {
  json arr = json::array();
  for (std::size_t k = 0; k < transcript.messages.size(); ++k) {
    const auto& m = transcript.messages[k];
    json entry;
    entry["step"] = k + 1;
    entry["sender"] = std::string(party_name(m.sender));
    entry["receiver"] = std::string(party_name(m.receiver));
    entry["payload"] = payload_to_json(m.payload, with_amplitudes);
    arr.push_back(std::move(entry));
  }
  return arr.dump(2) + "\n";
}

}  // namespace qhesim
