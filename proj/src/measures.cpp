#include "auem/measures.hpp"

#include <algorithm>
#include <cmath>

#include "auem/qudit.hpp"
#include "auem/tensor.hpp"

namespace auem {

double shannon_entropy(const std::vector<double>& probs) {
  double s = 0.0;
  for (double p : probs)
    if (p > 0.0) s -= p * std::log2(p);
  return s;
}

double binary_entropy(double p) { return shannon_entropy({p, 1.0 - p}); }

double von_neumann_entropy(const DensityOperator& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.mat, Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) {
    const double p = std::clamp(es.eigenvalues()(k), 0.0, 1.0);
    if (p > 0.0) s -= p * std::log2(p);
  }
  return s;
}

double entanglement_entropy(const PureState& psi, const std::vector<int>& cut) {
  return von_neumann_entropy(reduced_density(psi, cut));
}

double fidelity(const PureState& psi, const DensityOperator& rho) {
  if (psi.dims != rho.dims) throw std::invalid_argument("fidelity: dimension mismatch");
  return std::real(psi.amps.dot(rho.mat * psi.amps));
}

namespace {

void require_two_qubits(const DensityOperator& rho, const char* who) {
  if (rho.dims != std::vector<int>{2, 2})
    throw std::invalid_argument(std::string(who) + " requires a two-qubit density operator");
}

}  // namespace

double concurrence(const DensityOperator& rho) {
  require_two_qubits(rho, "concurrence");
  const Matrix yy = tensor_product(weyl_operator(BellIndex(2, 1, 1)),
                                   weyl_operator(BellIndex(2, 1, 1))).mat;  // (-i sy)x(-i sy) = -(sy x sy)
  const Matrix r = yy * rho.mat.conjugate() * yy.adjoint();  // equals (sy x sy) rho* (sy x sy)

  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.mat);
  Vector sq(4);
  for (int k = 0; k < 4; ++k) sq(k) = std::sqrt(std::max(es.eigenvalues()(k), 0.0));
  const Matrix sqrt_rho = es.eigenvectors() * sq.asDiagonal() * es.eigenvectors().adjoint();

  Eigen::SelfAdjointEigenSolver<Matrix> eh(sqrt_rho * r * sqrt_rho, Eigen::EigenvaluesOnly);
  std::vector<double> lam(4);
  const double top = std::max(eh.eigenvalues().maxCoeff(), 0.0);
  for (int k = 0; k < 4; ++k) {
    double v = eh.eigenvalues()(k);
    if (v < 1e-13 * top) v = 0.0;  // deflate numerically-zero modes
    lam[k] = std::sqrt(std::max(v, 0.0));
  }
  std::sort(lam.begin(), lam.end(), std::greater<>());
  return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

double entanglement_of_formation(const DensityOperator& rho) {
  require_two_qubits(rho, "entanglement_of_formation");
  const double c = concurrence(rho);
  return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
}

}  // namespace auem
