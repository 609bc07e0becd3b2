// Command-line driver for the entangling-machine library: trade-off curves,
// universality simulations, invariant verification, optimality scans and
// circuit checks.

#include <iostream>

#include <CLI11.hpp>

#include "auem/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"asymmetric universal entangling machine toolkit"};
  app.require_subcommand(1);

  auem::cli::RunConfig cfg;

  const auto add_common = [&](CLI::App* cmd, bool with_machine_params) {
    if (with_machine_params) {
      cmd->add_option("--dim", cfg.dim, "system dimension d")->check(CLI::Range(2, 16));
      cmd->add_option("--fidelity", cfg.fidelity, "signal fidelity F");
      cmd->add_option("--phi", cfg.phi, "free phase (radians)");
    }
    cmd->add_option("--samples", cfg.samples, "sample / grid-point / trial count")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", cfg.seed, "RNG seed");
    cmd->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", cfg.output, "output file (default: stdout)");
  };

  auto* curve = app.add_subcommand("curve", "emit the fidelity-entanglement trade-off curve");
  add_common(curve, true);
  curve->add_flag("--compare-symmetric", cfg.compare_symmetric,
                  "append the symmetric entangler's (F, E) point (d = 2)");

  auto* simulate = app.add_subcommand("simulate", "run the machine on random inputs");
  add_common(simulate, true);

  auto* verify = app.add_subcommand("verify", "run the invariant verification suites");
  add_common(verify, true);
  verify->add_option("--suite", cfg.suite,
                     "one of: algebra, channel, unitarity, covariance, circuit, qkd");

  auto* scan = app.add_subcommand("optimality-scan",
                                  "Monte-Carlo search for entanglement above h_d(F)");
  add_common(scan, true);

  auto* circuit = app.add_subcommand("circuit-verify",
                                     "check the qubit gate circuit against the closed form");
  add_common(circuit, true);
  circuit->add_option("--circuit", cfg.circuit_file, "gate dump to verify instead of synthesizing");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);  // prints help or the error message
    return rc == 0 ? auem::cli::kExitOk : auem::cli::kExitFail;
  }

  if (curve->parsed()) return auem::cli::cmd_curve(cfg, std::cout, std::cerr);
  if (simulate->parsed()) return auem::cli::cmd_simulate(cfg, std::cout, std::cerr);
  if (verify->parsed()) return auem::cli::cmd_verify(cfg, std::cout, std::cerr);
  if (scan->parsed()) return auem::cli::cmd_optimality_scan(cfg, std::cout, std::cerr);
  if (circuit->parsed()) return auem::cli::cmd_circuit_verify(cfg, std::cout, std::cerr);
  return auem::cli::kExitFail;
}
