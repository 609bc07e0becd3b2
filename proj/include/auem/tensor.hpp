#pragma once

#include <vector>

#include "auem/types.hpp"

namespace auem {

// Kronecker products; dims concatenate, indexing stays row-major with the
// left operand most significant.
PureState tensor_product(const PureState& a, const PureState& b);
OperatorMatrix tensor_product(const OperatorMatrix& a, const OperatorMatrix& b);
DensityOperator tensor_product(const DensityOperator& a, const DensityOperator& b);

// Trace out every subsystem not in `keep`. `keep` must be a nonempty proper
// subset of subsystem indices; result dims follow the original order.
DensityOperator partial_trace(const DensityOperator& rho, const std::vector<int>& keep);

// Reduced state of a pure state on the `keep` subsystems, computed without
// materializing the full |psi><psi| matrix.
DensityOperator reduced_density(const PureState& psi, const std::vector<int>& keep);

struct EigenPair {
  double value;
  Vector vector;
};

// Eigendecomposition of a Hermitian matrix, eigenvalues sorted descending,
// eigenvectors orthonormal. Throws if the input is not Hermitian.
std::vector<EigenPair> eig_hermitian(const Matrix& h);
std::vector<EigenPair> eig_hermitian(const OperatorMatrix& h);

// Extend a mutually orthonormal set to a full orthonormal basis and return
// the added vectors. Candidates are the computational basis kets in index
// order, projected by stabilized Gram-Schmidt; candidates with residual norm
// below 1e-6 are skipped. Deterministic for a given input set.
std::vector<PureState> complete_orthonormal(const std::vector<PureState>& vs);

}  // namespace auem
