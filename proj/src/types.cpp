#include "auem/types.hpp"

namespace auem {

long long dim_product(const std::vector<int>& dims) {
  if (dims.empty()) throw std::invalid_argument("dims must be nonempty");
  long long p = 1;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("subsystem dimensions must be positive");
    p *= d;
  }
  return p;
}

PureState::PureState(std::vector<int> dims_, Vector amps_)
    : dims(std::move(dims_)), amps(std::move(amps_)) {
  if (amps.size() != dim_product(dims))
    throw std::invalid_argument("amplitude vector length does not match dims");
  if (std::abs(amps.norm() - 1.0) > kTolAlg)
    throw std::invalid_argument("pure state is not normalized");
}

PureState basis_state(int d, int k) {
  if (d < 1 || k < 0 || k >= d) throw std::invalid_argument("basis index out of range");
  Vector v = Vector::Zero(d);
  v(k) = 1.0;
  return PureState({d}, std::move(v));
}

DensityOperator::DensityOperator(std::vector<int> dims_, Matrix mat_)
    : dims(std::move(dims_)), mat(std::move(mat_)) {
  const long long n = dim_product(dims);
  if (mat.rows() != n || mat.cols() != n)
    throw std::invalid_argument("density matrix size does not match dims");
  if ((mat - mat.adjoint()).cwiseAbs().maxCoeff() > kTolAlg)
    throw std::invalid_argument("density matrix is not Hermitian");
  if (std::abs(mat.trace() - Complex(1.0)) > kTolAlg)
    throw std::invalid_argument("density matrix does not have unit trace");
}

bool DensityOperator::is_positive(double tol) const {
  Eigen::SelfAdjointEigenSolver<Matrix> es(mat, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= -tol;
}

OperatorMatrix::OperatorMatrix(std::vector<int> dims_, Matrix mat_)
    : dims(std::move(dims_)), mat(std::move(mat_)) {
  const long long n = dim_product(dims);
  if (mat.rows() != n || mat.cols() != n)
    throw std::invalid_argument("operator matrix size does not match dims");
}

bool OperatorMatrix::is_unitary(double tol) const {
  return unitarity_residual(mat) <= tol;
}

OperatorMatrix identity_op(std::vector<int> dims) {
  const long long n = dim_product(dims);
  return OperatorMatrix(std::move(dims), Matrix::Identity(n, n));
}

DensityOperator density_from_pure(const PureState& psi) {
  return DensityOperator(psi.dims, psi.amps * psi.amps.adjoint());
}

double unitarity_residual(const Matrix& u) {
  Matrix g = u.adjoint() * u;
  g.diagonal().array() -= 1.0;
  return g.cwiseAbs().maxCoeff();
}

}  // namespace auem
