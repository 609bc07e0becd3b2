#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "auem/machine.hpp"

namespace auem::cli {

// Exit codes: 0 pass, 1 verification/parameter failure, 2 I/O failure.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitIo = 2;

struct RunConfig {
  int dim = 2;
  double fidelity = 5.0 / 6.0;
  double phi = 0.0;
  long long samples = 100;
  std::uint64_t seed = 42;
  std::string format = "csv";  // csv | json
  std::string output;          // empty -> stdout
  std::string suite;           // verify: empty -> all suites
  bool compare_symmetric = false;
  std::string circuit_file;  // circuit-verify: load a dump instead of synthesizing
};

// Uniform fidelity grid on [1/d, 1] with E = h_d(F) per row; the optional
// comparison record appends the symmetric entangler's (F = 5/6, E_f) point.
std::vector<TradeoffRecord> curve_records(int d, long long samples, bool compare_symmetric);

std::string render_curve_csv(const std::vector<TradeoffRecord>& records);
std::string render_curve_json(const std::vector<TradeoffRecord>& records);
std::vector<TradeoffRecord> parse_curve_csv(std::istream& in);

struct SimulationReport {
  int d;
  double fidelity;
  double phi;
  long long samples;
  std::uint64_t seed;
  double target_entanglement;
  double max_fidelity_dev;   // max |<psi|rho_S|psi> - F| over inputs
  double mean_fidelity_dev;
  double max_entanglement_dev;  // max |E(S:XY) - h_d(F)| over inputs
  double mean_entanglement_dev;
  double signal_fidelity;     // <psi|rho_S|psi>, input-independent
  double clone_fidelity;      // <psi|rho_Y|psi>
  double conjugate_fidelity;  // <psi*|rho_X|psi*>
};

SimulationReport simulate(const RunConfig& cfg);

int cmd_curve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_optimality_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_circuit_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace auem::cli
