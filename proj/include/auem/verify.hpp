#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "auem/types.hpp"

namespace auem {

struct Check {
  std::string name;
  double residual;
  double tolerance;
  bool pass;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  bool passed() const;
  double max_residual() const;
};

// Weyl/Bell operator identities, exhaustive over all index pairs at this d:
// composition phases, one-sided Bell generation, the twirl, the U x U*
// eigenphases and the projector sum.
SuiteReport verify_algebra(int d);

// Channel consistency at (d, F, phi): Kraus completeness, Kraus sum vs the
// closed-form depolarizing channel vs the traced machine output, and the
// Kraus-times-ancilla reconstruction of the full output, over random inputs.
SuiteReport verify_channel(int d, double fidelity, double phi, int samples, std::uint64_t seed);

// Machine unitary contracts: U_M unitarity, its action on the input subspace,
// and (when F clears the bound) agreement of the minimal-interaction form.
SuiteReport verify_unitarity(int d, double fidelity, double phi);

// Output covariance apply(U psi) = (U x U* x U) apply(psi) over random pairs.
SuiteReport verify_covariance(int d, double fidelity, double phi, int samples, std::uint64_t seed);

// Qubit circuit contracts: Bell-phase gate matrix, eigenstate phases, and the
// three-qubit circuit against the closed form over random (F, phi, psi).
SuiteReport verify_circuit(int samples, std::uint64_t seed);

// Six-state eavesdropping conditions over a fidelity sweep and phase set.
SuiteReport verify_qkd(const std::vector<double>& fidelities, const std::vector<double>& phis);

// The default `verify` run: all suites at d in {2, 3} with fixed seeds.
std::vector<SuiteReport> verify_all(std::uint64_t seed);

}  // namespace auem
