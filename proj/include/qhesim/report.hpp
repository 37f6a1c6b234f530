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
#include <vector>

#include "qhesim/protocol.hpp"

namespace qhesim {

// One row of CLI output. Every field is emitted in every row; binary
// strings keep their declared widths (leading zeros included), and fields
// that a mode does not produce stay empty.
struct RunReport {
  std::string mode;
  std::uint64_t seed = 0;
  std::string ek;  // x bits then z bits, concatenated
  std::string y;
  std::string d;
  std::string c;
  std::string encrypted_result;
  std::string dk;
  std::string decrypted;
  bool verified = false;
  double elapsed_ms = 0.0;
  std::optional<double> fidelity;  // compact-protocol runs only
  std::optional<int> attempts;
};

RunReport report_from_protocol1(const Protocol1Result& run, std::uint64_t seed,
                                double elapsed_ms);

std::string reports_to_json(const std::vector<RunReport>& rows);
std::string reports_to_table(const std::vector<RunReport>& rows);
std::string reports_to_csv(const std::vector<RunReport>& rows);

// Full transcript export; with_amplitudes dumps every quantum payload's
// amplitude vector as hexfloat (base-16) re/im pairs.
std::string transcript_to_json(const Transcript& transcript,
                               bool with_amplitudes);

}  // namespace qhesim
