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

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qhesim/circuit.hpp"
#include "qhesim/protocol.hpp"
#include "qhesim/reference_rows.hpp"
#include "qhesim/report.hpp"
#include "qhesim/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;  // protocol / verification failure
constexpr int kExitUsage = 2;    // bad flags or malformed inputs

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalFlags {
  std::uint64_t seed = 0;
  std::string format = "table";
  std::string out_path;
};

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

qhesim::Bits parse_bits_arg(const std::string& text, const char* what) {
  try {
    return qhesim::parse_bits(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(std::string(what) + " must be a binary string, got '" +
                     text + "'");
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write to '" + path + "'");
  out << content;
}

std::string format_reports(const std::vector<qhesim::RunReport>& rows,
                           const std::string& format) {
  if (format == "json") return qhesim::reports_to_json(rows);
  if (format == "table") return qhesim::reports_to_table(rows);
  if (format == "csv") return qhesim::reports_to_csv(rows);
  throw UsageError("unknown format '" + format + "' (json|table|csv)");
}

void emit(const std::vector<qhesim::RunReport>& rows, const GlobalFlags& g) {
  const std::string text = format_reports(rows, g.format);
  std::cout << text;
  if (!g.out_path.empty()) write_file(g.out_path, text);
}

void dump_transcripts(const qhesim::Transcript& transcript,
                      const std::string& text_path,
                      const std::string& json_path) {
  if (!text_path.empty()) write_file(text_path, transcript.str());
  if (!json_path.empty())
    write_file(json_path, qhesim::transcript_to_json(transcript, true));
}

qhesim::PauliKey parse_ek_arg(const std::string& text) {
  const qhesim::Bits bits = parse_bits_arg(text, "--ek");
  if (bits.size() % 2 != 0)
    throw UsageError("--ek must concatenate equal-length x and z halves");
  const std::size_t n = bits.size() / 2;
  qhesim::PauliKey key;
  key.x.assign(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(n));
  key.z.assign(bits.begin() + static_cast<std::ptrdiff_t>(n), bits.end());
  return key;
}

struct SearchArgs {
  std::string target;
  int trials = 1;
  std::string script_c;
  std::string ek;
  std::string evk;
  std::string transcript_path;
  std::string transcript_json_path;
};

int cmd_search(const SearchArgs& args, const GlobalFlags& g) {
  qhesim::Protocol1Options base;
  base.target = parse_bits_arg(args.target, "--target");
  if (base.target.size() != 2)
    throw UsageError("--target must be 2 bits for the search demo");
  if (args.trials < 1) throw UsageError("--trials must be >= 1");

  if (!args.script_c.empty())
    base.scripted_c = parse_bits_arg(args.script_c, "--script-c");
  if (!args.ek.empty()) {
    qhesim::PauliKey key = parse_ek_arg(args.ek);
    if (key.num_wires() != 3)
      throw UsageError("--ek must carry 6 bits (x and z over 3 wires)");
    base.forced_ek = std::move(key);
  }
  if (!args.evk.empty()) {
    const qhesim::Bits bits = parse_bits_arg(args.evk, "--evk");
    if (bits.size() % 2 != 0)
      throw UsageError("--evk must concatenate equal-length y and d halves");
    const std::size_t half = bits.size() / 2;
    base.forced_yd = {
        qhesim::Bits(bits.begin(), bits.begin() + static_cast<std::ptrdiff_t>(half)),
        qhesim::Bits(bits.begin() + static_cast<std::ptrdiff_t>(half), bits.end())};
  }

  std::vector<qhesim::RunReport> rows;
  bool all_verified = true;
  qhesim::Transcript last_transcript;
  for (int trial = 0; trial < args.trials; ++trial) {
    qhesim::Protocol1Options options = base;
    options.seed = g.seed + static_cast<std::uint64_t>(trial);
    const auto start = std::chrono::steady_clock::now();
    qhesim::Protocol1Result run;
    try {
      run = qhesim::run_protocol1(options);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    rows.push_back(
        qhesim::report_from_protocol1(run, options.seed, ms_since(start)));
    all_verified = all_verified && run.verified;
    last_transcript = std::move(run.transcript);
  }

  emit(rows, g);
  dump_transcripts(last_transcript, args.transcript_path,
                   args.transcript_json_path);
  return all_verified ? kExitOk : kExitFailure;
}

int cmd_table2(const GlobalFlags& g) {
  using nlohmann::ordered_json;
  bool all_pass = true;
  ordered_json json_rows = ordered_json::array();
  std::ostringstream table;

  for (std::size_t i = 0; i < qhesim::kReferenceRows.size(); ++i) {
    const auto& row = qhesim::kReferenceRows[i];
    qhesim::Protocol1Options options;
    options.target = qhesim::parse_bits(qhesim::kReferenceTarget);
    options.seed = g.seed;
    qhesim::PauliKey ek;
    ek.x = qhesim::parse_bits(row.x0);
    ek.z = qhesim::parse_bits(row.z0);
    options.forced_ek = std::move(ek);
    options.forced_yd = {qhesim::parse_bits(row.y1), qhesim::parse_bits(row.d1)};
    options.scripted_c = qhesim::parse_bits(row.c1);

    const qhesim::Protocol1Result run = qhesim::run_protocol1(options);
    const std::string got_enc = qhesim::bits_to_string(run.encrypted_result);
    const std::string got_dk = qhesim::bits_to_string(run.dk);
    const std::string got_dec = qhesim::bits_to_string(run.decrypted);
    const bool pass = got_enc == row.encrypted && got_dk == row.dk &&
                      got_dec == row.decrypted;
    all_pass = all_pass && pass;

    table << "row " << (i + 1) << ": " << (pass ? "PASS" : "FAIL");
    if (!pass)
      table << "  expected (enc=" << row.encrypted << " dk=" << row.dk
            << " dec=" << row.decrypted << ") got (enc=" << got_enc
            << " dk=" << got_dk << " dec=" << got_dec << ")";
    table << "\n";

    json_rows.push_back({{"row", i + 1},
                         {"pass", pass},
                         {"expected",
                          {{"encrypted_result", row.encrypted},
                           {"dk", row.dk},
                           {"decrypted", row.decrypted}}},
                         {"got",
                          {{"encrypted_result", got_enc},
                           {"dk", got_dk},
                           {"decrypted", got_dec}}}});
  }

  std::string text;
  if (g.format == "json") {
    text = json_rows.dump(2) + "\n";
  } else {
    table << (all_pass ? "5/5 rows match\n" : "MISMATCH\n");
    text = table.str();
  }
  std::cout << text;
  if (!g.out_path.empty()) write_file(g.out_path, text);
  return all_pass ? kExitOk : kExitFailure;
}

struct CliffordArgs {
  std::string circuit_path;
  std::string input = "uniform";
  int n = 0;
  std::string transcript_path;
  std::string transcript_json_path;
};

// Names the first line holding a T/Tdg mnemonic, for rejection messages.
int find_t_line(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string mnemonic;
    if (ls >> mnemonic && (mnemonic == "t" || mnemonic == "tdg")) return lineno;
  }
  return 0;
}

int cmd_clifford(const CliffordArgs& args, const GlobalFlags& g) {
  std::ifstream in(args.circuit_path);
  if (!in) throw UsageError("cannot open circuit file '" + args.circuit_path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();

  qhesim::Circuit circuit;
  try {
    circuit = qhesim::parse_circuit(text);
  } catch (const qhesim::CircuitParseError& e) {
    throw UsageError(args.circuit_path + ": " + e.what());
  }
  if (!qhesim::is_clifford_circuit(circuit))
    throw UsageError(args.circuit_path + ": line " +
                     std::to_string(find_t_line(text)) +
                     ": T/Tdg gates are not supported by the compact "
                     "Clifford protocol");

  int n = args.n > 0 ? args.n : circuit.num_wires;
  if (n < 1 || n > 3) throw UsageError("--n must be between 1 and 3");
  if (circuit.num_wires > n)
    throw UsageError("circuit touches wire " +
                     std::to_string(circuit.num_wires) + " but --n is " +
                     std::to_string(n));
  circuit = qhesim::embed(circuit, 0, n);

  qhesim::StateVector input;
  if (args.input == "uniform") {
    input = qhesim::new_uniform(n);
  } else {
    const qhesim::Bits bits = parse_bits_arg(args.input, "--input");
    if (static_cast<int>(bits.size()) != n)
      throw UsageError("--input must carry " + std::to_string(n) + " bits");
    input = qhesim::new_basis_state(n, bits);
  }

  const auto start = std::chrono::steady_clock::now();
  const qhesim::Protocol2Result run =
      qhesim::run_protocol2(circuit, input, n, g.seed);
  const double elapsed = ms_since(start);
  const double fid =
      qhesim::fidelity(run.output, qhesim::simulate_plain(circuit, input));

  qhesim::RunReport report;
  report.mode = "clifford";
  report.seed = g.seed;
  report.ek = qhesim::bits_to_string(run.ek.x) + qhesim::bits_to_string(run.ek.z);
  report.dk = qhesim::bits_to_string(run.dk.x) + qhesim::bits_to_string(run.dk.z);
  report.verified = fid >= 1.0 - 1e-9;
  report.elapsed_ms = elapsed;
  report.fidelity = fid;
  report.attempts = run.search_attempts;

  emit({report}, g);
  dump_transcripts(run.transcript, args.transcript_path,
                   args.transcript_json_path);
  return report.verified ? kExitOk : kExitFailure;
}

int cmd_selftest(bool as_json, const GlobalFlags& g) {
  const std::vector<qhesim::SuiteResult> suites = qhesim::run_selftest(g.seed);
  bool all_pass = true;
  for (const auto& s : suites) all_pass = all_pass && s.passed;

  std::string text;
  if (as_json) {
    nlohmann::ordered_json j;
    for (const auto& s : suites) j[s.name] = s.passed;
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    for (const auto& s : suites)
      os << s.name << ": " << (s.passed ? "PASS" : "FAIL") << " (" << s.detail
         << ")\n";
    os << (all_pass ? "all suites passed\n" : "SUITE FAILURE\n");
    text = os.str();
  }
  std::cout << text;
  if (!g.out_path.empty()) write_file(g.out_path, text);
  return all_pass ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qhesim - quantum one-time-pad homomorphic evaluation: blind Grover "
      "search with a trusted key center, and compact Clifford evaluation "
      "with a Grover-assisted key search"};
  app.require_subcommand(1);

  GlobalFlags g;
  app.add_option("--seed", g.seed, "base seed; trial k runs with seed+k");
  app.add_option("--format", g.format, "output format: table|json|csv")
      ->default_str("table");
  app.add_option("--out", g.out_path, "also write the output to this file");

  SearchArgs search_args;
  auto* search = app.add_subcommand(
      "search", "run the blind search protocol end to end");
  search->fallthrough();
  search->add_option("--target", search_args.target, "2-bit search target")
      ->required();
  search->add_option("--trials", search_args.trials, "number of runs");
  search->add_option("--script-c", search_args.script_c,
                     "force the gadget measurement bits (one per gadget)");
  search->add_option("--ek", search_args.ek,
                     "force the encryption key, x then z bits");
  search->add_option("--evk", search_args.evk,
                     "force the evaluation key, y then d bits");
  search->add_option("--transcript", search_args.transcript_path,
                     "write the message transcript (text) to this file");
  search->add_option("--transcript-json", search_args.transcript_json_path,
                     "write the full transcript with amplitude dumps (JSON)");

  auto* table2 = app.add_subcommand(
      "table2", "replay the five recorded blind-search reference runs");
  table2->fallthrough();

  CliffordArgs clifford_args;
  auto* clifford = app.add_subcommand(
      "clifford", "homomorphically evaluate a Clifford circuit");
  clifford->fallthrough();
  clifford->add_option("--circuit", clifford_args.circuit_path,
                       "circuit file (one op per line)")
      ->required();
  clifford->add_option("--input", clifford_args.input,
                       "input state: 'uniform' or a basis bit string");
  clifford->add_option("--n", clifford_args.n, "wire count (1..3)");
  clifford->add_option("--transcript", clifford_args.transcript_path,
                       "write the message transcript (text) to this file");
  clifford->add_option("--transcript-json",
                       clifford_args.transcript_json_path,
                       "write the full transcript with amplitude dumps (JSON)");

  bool selftest_json = false;
  auto* selftest =
      app.add_subcommand("selftest", "run the built-in invariant suites");
  selftest->fallthrough();
  selftest->add_flag("--json", selftest_json, "machine-readable pass/fail map");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (search->parsed()) return cmd_search(search_args, g);
    if (table2->parsed()) return cmd_table2(g);
    if (clifford->parsed()) return cmd_clifford(clifford_args, g);
    if (selftest->parsed()) return cmd_selftest(selftest_json, g);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
