#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace auem {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

// Tolerance budget: purely algebraic identities must resolve to kTolAlg;
// anything that passes through an eigendecomposition gets kTolEig.
inline constexpr double kTolAlg = 1e-10;
inline constexpr double kTolEig = 1e-9;

long long dim_product(const std::vector<int>& dims);

// Pure state on a composite space. Composite indexing is row-major with the
// leftmost subsystem most significant: index = (i0*d1 + i1)*d2 + i2 + ...
// Subsystem order throughout the library is S, X, Y.
struct PureState {
  std::vector<int> dims;
  Vector amps;

  PureState() = default;
  PureState(std::vector<int> dims_, Vector amps_);

  int dim() const { return static_cast<int>(amps.size()); }
  double norm() const { return amps.norm(); }
};

// |k> on a single d-level system.
PureState basis_state(int d, int k);

// Hermitian, unit-trace operator on a composite space. Hermiticity and trace
// are enforced at construction; positivity is left to is_positive() because
// it needs an eigensolve.
struct DensityOperator {
  std::vector<int> dims;
  Matrix mat;

  DensityOperator() = default;
  DensityOperator(std::vector<int> dims_, Matrix mat_);

  int dim() const { return static_cast<int>(mat.rows()); }
  bool is_positive(double tol = kTolEig) const;
};

// General square operator on a composite space; unitarity is a predicate,
// not an assumption.
struct OperatorMatrix {
  std::vector<int> dims;
  Matrix mat;

  OperatorMatrix() = default;
  OperatorMatrix(std::vector<int> dims_, Matrix mat_);

  int dim() const { return static_cast<int>(mat.rows()); }
  bool is_unitary(double tol = kTolAlg) const;
};

OperatorMatrix identity_op(std::vector<int> dims);
DensityOperator density_from_pure(const PureState& psi);

// max |A_ij| deviation from the identity of U† U; the unitarity residual.
double unitarity_residual(const Matrix& u);

}  // namespace auem
