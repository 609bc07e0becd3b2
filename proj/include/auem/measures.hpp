#pragma once

#include <vector>

#include "auem/types.hpp"

namespace auem {

// -sum_i p_i log2 p_i with the 0 log 0 = 0 convention.
double shannon_entropy(const std::vector<double>& probs);
double binary_entropy(double p);

// Von Neumann entropy in bits; eigenvalues are clamped into [0, 1] before
// the logs to absorb eigensolver noise on rank-deficient states.
double von_neumann_entropy(const DensityOperator& rho);

// Entanglement of a pure state across the bipartition (cut | complement):
// entropy of the reduced state on `cut`.
double entanglement_entropy(const PureState& psi, const std::vector<int>& cut);

// <psi| rho |psi>.
double fidelity(const PureState& psi, const DensityOperator& rho);

// Wootters concurrence of a two-qubit density operator. Computed through the
// Hermitian product sqrt(rho) (sy x sy) rho* (sy x sy) sqrt(rho); eigenvalues
// below 1e-13 of the largest are treated as exact zeros before the square
// root, which would otherwise amplify solver noise on rank-deficient states.
double concurrence(const DensityOperator& rho);

// h2((1 + sqrt(1 - C^2))/2) in bits, C the concurrence.
double entanglement_of_formation(const DensityOperator& rho);

}  // namespace auem
