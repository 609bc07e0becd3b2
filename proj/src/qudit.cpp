#include "auem/qudit.hpp"

#include <cmath>

#include "auem/tensor.hpp"

namespace auem {
namespace {

int mod(long long v, int d) {
  const long long r = v % d;
  return static_cast<int>(r < 0 ? r + d : r);
}

}  // namespace

BellIndex::BellIndex(int d_, int m_, int n_) : d(d_) {
  if (d < 2) throw std::invalid_argument("BellIndex requires d >= 2");
  m = mod(m_, d);
  n = mod(n_, d);
}

Complex root_of_unity(int d, long long k) {
  const int r = mod(k, d);
  if (r == 0) return Complex(1.0, 0.0);
  const double angle = 2.0 * M_PI * static_cast<double>(r) / static_cast<double>(d);
  return Complex(std::cos(angle), std::sin(angle));
}

PureState bell_state(const BellIndex& idx) {
  const int d = idx.d;
  Vector v = Vector::Zero(static_cast<long long>(d) * d);
  const double w = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j)
    v(static_cast<long long>(j) * d + mod(j + idx.m, d)) = w * root_of_unity(d, static_cast<long long>(j) * idx.n);
  return PureState({d, d}, std::move(v));
}

OperatorMatrix weyl_operator(const BellIndex& idx) {
  const int d = idx.d;
  Matrix u = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k)
    u(mod(k + idx.m, d), k) = root_of_unity(d, static_cast<long long>(k) * idx.n);
  return OperatorMatrix({d}, std::move(u));
}

PureState bell_from_weyl(const BellIndex& idx, Side side) {
  const int d = idx.d;
  const PureState psi00 = bell_state(BellIndex(d, 0, 0));
  Vector v;
  if (side == Side::kRight) {
    const OperatorMatrix op = tensor_product(identity_op({d}), weyl_operator(idx));
    v = op.mat * psi00.amps;
  } else {
    const OperatorMatrix op = tensor_product(weyl_operator(BellIndex(d, -idx.m, idx.n)), identity_op({d}));
    v = root_of_unity(d, -static_cast<long long>(idx.m) * idx.n) * (op.mat * psi00.amps);
  }
  return PureState({d, d}, std::move(v));
}

OperatorMatrix weyl_twirl_sum(const DensityOperator& rho) {
  if (rho.dims.size() != 1) throw std::invalid_argument("weyl_twirl_sum expects a single d-level system");
  const int d = rho.dims.front();
  Matrix acc = Matrix::Zero(d, d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) {
      const Matrix u = weyl_operator(BellIndex(d, m, n)).mat;
      acc += u * rho.mat * u.adjoint();
    }
  return OperatorMatrix({d}, acc / static_cast<double>(d));
}

Complex bell_eigenphase(const BellIndex& kl, const BellIndex& mn) {
  if (kl.d != mn.d) throw std::invalid_argument("bell_eigenphase: mismatched dimensions");
  const int d = kl.d;
  const PureState psi = bell_state(kl);
  const OperatorMatrix op =
      tensor_product(weyl_operator(mn), weyl_operator(BellIndex(d, mn.m, -mn.n)));
  const Complex overlap = psi.amps.dot(op.mat * psi.amps);
  const Complex expected =
      root_of_unity(d, -(static_cast<long long>(mn.n) * kl.m + static_cast<long long>(mn.m) * kl.n));
  if (std::abs(overlap - expected) > kTolAlg)
    throw std::logic_error("bell_eigenphase: overlap deviates from closed form");
  return overlap;
}

OperatorMatrix weyl_pair_sum(int d) {
  if (d < 2) throw std::invalid_argument("weyl_pair_sum requires d >= 2");
  Matrix acc = Matrix::Zero(static_cast<long long>(d) * d, static_cast<long long>(d) * d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n)
      acc += tensor_product(weyl_operator(BellIndex(d, m, n)), weyl_operator(BellIndex(d, m, -n))).mat;
  return OperatorMatrix({d, d}, std::move(acc));
}

PureState orthogonal_state(const PureState& psi) {
  if (psi.dims.size() != 1) throw std::invalid_argument("orthogonal_state expects a single system");
  const int d = psi.dims.front();
  if (d % 2 != 0) throw std::invalid_argument("orthogonal_state: unsupported odd dimension");
  Vector out(d);
  for (int j = 0; j < d; j += 2) {
    // sigma_y^{(j)(j+1)} acting on the conjugated amplitudes
    out(j) = Complex(0.0, -1.0) * std::conj(psi.amps(j + 1));
    out(j + 1) = Complex(0.0, 1.0) * std::conj(psi.amps(j));
  }
  return PureState({d}, std::move(out));
}

}  // namespace auem
