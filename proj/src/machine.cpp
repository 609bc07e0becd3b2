#include "auem/machine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "auem/measures.hpp"
#include "auem/qudit.hpp"
#include "auem/random.hpp"
#include "auem/tensor.hpp"

namespace auem {
namespace {

void require_dim(int d) {
  if (d < 2) throw std::invalid_argument("machine requires d >= 2");
}

void require_signal(const MachineParams& p, const PureState& psi) {
  if (psi.dims != std::vector<int>{p.d})
    throw std::invalid_argument("signal state must live on a single d-level system");
}

constexpr double kRangeSlack = 1e-12;

std::string bound_as_fraction(int d) {
  // 1 - 4(d-1)/d^3 = (d^3 - 4d + 4)/d^3, reduced
  const long long den = static_cast<long long>(d) * d * d;
  const long long num = den - 4 * (d - 1);
  const long long g = std::gcd(num, den);
  return std::to_string(num / g) + "/" + std::to_string(den / g);
}

}  // namespace

FidelityTooLowError::FidelityTooLowError(int d, double fidelity, double bound)
    : std::invalid_argument("fidelity " + std::to_string(fidelity) +
                            " is below the minimal-interaction bound 1 - 4(d-1)/d^3 = " +
                            bound_as_fraction(d) + " for d = " + std::to_string(d)),
      bound_(bound) {}

MachineParams params_from_fidelity(int d, double fidelity, double phi) {
  require_dim(d);
  const double fmin = 1.0 / d;
  if (fidelity < fmin - kRangeSlack || fidelity > 1.0 + kRangeSlack)
    throw std::invalid_argument("fidelity must lie in [1/d, 1]");
  const double f = std::clamp(fidelity, fmin, 1.0);

  MachineParams p;
  p.d = d;
  p.fidelity = f;
  p.phi = phi;
  p.pi_s = (1.0 - f) * d / (d - 1.0);
  p.a = std::sqrt(std::max(0.0, 1.0 - p.pi_s + p.pi_s / (static_cast<double>(d) * d)));
  p.b = std::sqrt(std::max(0.0, p.pi_s)) / d;
  p.alpha = p.a * Complex(std::cos(phi), std::sin(phi)) - p.b;
  p.beta = p.b * d;

  const double relation = std::norm(p.alpha) + (2.0 / d) * std::real(p.alpha) * p.beta + p.beta * p.beta;
  if (std::abs(relation - 1.0) > kTolAlg)
    throw std::logic_error("machine parameter relation violated");
  return p;
}

MachineParams params_symmetric(int d) {
  require_dim(d);
  return params_from_fidelity(d, (d + 3.0) / (2.0 * d + 2.0), 0.0);
}

double optimal_entanglement(int d, double fidelity) {
  require_dim(d);
  const double fmin = 1.0 / d;
  if (fidelity < fmin - kRangeSlack || fidelity > 1.0 + kRangeSlack)
    throw std::invalid_argument("optimal_entanglement: fidelity outside [1/d, 1]");
  const double f = std::clamp(fidelity, fmin, 1.0);
  double e = 0.0;
  if (f > 0.0) e -= f * std::log2(f);
  if (f < 1.0) e -= (1.0 - f) * std::log2((1.0 - f) / (d - 1.0));
  return e;
}

double fidelity_for_entanglement(int d, double entanglement_bits) {
  require_dim(d);
  const double emax = std::log2(static_cast<double>(d));
  if (entanglement_bits < -kRangeSlack || entanglement_bits > emax + kRangeSlack)
    throw std::invalid_argument("fidelity_for_entanglement: entanglement outside [0, log2 d]");
  const double e = std::clamp(entanglement_bits, 0.0, emax);

  double lo = 1.0 / d, hi = 1.0;  // h_d decreasing: h(lo) = log2 d, h(hi) = 0
  while (hi - lo > 1e-16) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (optimal_entanglement(d, mid) > e ? lo : hi) = mid;
  }
  const double f = 0.5 * (lo + hi);
  if (std::abs(optimal_entanglement(d, f) - e) > 1e-12 &&
      std::abs(optimal_entanglement(d, lo) - e) > 1e-12 &&
      std::abs(optimal_entanglement(d, hi) - e) > 1e-12)
    throw std::logic_error("fidelity_for_entanglement: bisection failed to converge");
  return f;
}

std::vector<OperatorMatrix> kraus_operators(const MachineParams& p) {
  const int d = p.d;
  std::vector<OperatorMatrix> ops;
  ops.reserve(static_cast<std::size_t>(d) * d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) {
      const double w = (m == 0 && n == 0) ? p.a : p.b;
      OperatorMatrix u = weyl_operator(BellIndex(d, m, n));
      u.mat *= w;
      ops.push_back(std::move(u));
    }
  return ops;
}

DensityOperator depolarize(const MachineParams& p, const PureState& psi) {
  require_signal(p, psi);
  const int d = p.d;
  Matrix m = (1.0 - p.pi_s) * (psi.amps * psi.amps.adjoint());
  m += (p.pi_s / d) * Matrix::Identity(d, d);
  return DensityOperator({d}, std::move(m));
}

std::vector<PureState> ancilla_basis(const MachineParams& p) {
  const int d = p.d;
  std::vector<PureState> basis;
  basis.reserve(static_cast<std::size_t>(d) * d);
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) {
      if (m == 0 && n == 0) {
        PureState s = bell_state(BellIndex(d, 0, 0));
        s.amps *= Complex(std::cos(p.phi), std::sin(p.phi));
        basis.push_back(std::move(s));
      } else {
        PureState s = bell_state(BellIndex(d, -m, -n));
        s.amps *= root_of_unity(d, static_cast<long long>(m) * n);
        basis.push_back(std::move(s));
      }
    }
  return basis;
}

OperatorMatrix coupling_operator(const MachineParams& p) {
  const int d = p.d;
  const PureState psi00 = bell_state(BellIndex(d, 0, 0));
  Matrix m = p.alpha * Matrix::Identity(psi00.dim(), psi00.dim());
  m += (p.beta * d) * (psi00.amps * psi00.amps.adjoint());
  return OperatorMatrix({d, d}, std::move(m));
}

PureState apply_machine(const MachineParams& p, const PureState& psi) {
  require_signal(p, psi);
  const PureState psi00 = bell_state(BellIndex(p.d, 0, 0));
  Vector out = p.alpha * tensor_product(psi, psi00).amps;
  out += p.beta * tensor_product(psi00, psi).amps;
  return PureState({p.d, p.d, p.d}, std::move(out));
}

OperatorMatrix machine_unitary(const MachineParams& p) {
  const int d = p.d;
  const PureState psi00 = bell_state(BellIndex(d, 0, 0));
  std::vector<PureState> domain, image;
  domain.reserve(d);
  image.reserve(d);
  for (int k = 0; k < d; ++k) {
    const PureState ek = basis_state(d, k);
    domain.push_back(tensor_product(ek, psi00));
    image.push_back(apply_machine(p, ek));
  }
  const std::vector<PureState> domain_rest = complete_orthonormal(domain);
  const std::vector<PureState> image_rest = complete_orthonormal(image);

  const long long n = static_cast<long long>(d) * d * d;
  Matrix u = Matrix::Zero(n, n);
  for (int k = 0; k < d; ++k) u += image[k].amps * domain[k].amps.adjoint();
  for (std::size_t j = 0; j < domain_rest.size(); ++j)
    u += image_rest[j].amps * domain_rest[j].amps.adjoint();
  return OperatorMatrix({d, d, d}, std::move(u));
}

LocalOutputs local_outputs(const MachineParams& p, const PureState& psi) {
  require_signal(p, psi);
  const int d = p.d;
  const Matrix eye = Matrix::Identity(d, d);
  const Matrix proj = psi.amps * psi.amps.adjoint();
  const Vector conj_amps = psi.amps.conjugate();
  const Matrix proj_conj = conj_amps * conj_amps.adjoint();

  const double cross = (2.0 / d) * std::real(p.alpha) * p.beta;
  const double a2 = std::norm(p.alpha);
  const double b2 = p.beta * p.beta;

  LocalOutputs out{
      DensityOperator({d}, (a2 + cross) * proj + (b2 / d) * eye),
      DensityOperator({d}, cross * proj_conj + ((a2 + b2) / d) * eye),
      DensityOperator({d}, (cross + b2) * proj + (a2 / d) * eye),
  };
  return out;
}

double conjugate_fidelity(const MachineParams& p) {
  return std::norm(p.alpha + p.beta) / p.d;
}

double minimal_fidelity_bound(int d) {
  require_dim(d);
  return 1.0 - 4.0 * (d - 1.0) / (static_cast<double>(d) * d * d);
}

MinimalInteractionAngles minimal_interaction_angles(int d, double fidelity) {
  require_dim(d);
  const double bound = minimal_fidelity_bound(d);
  if (fidelity > 1.0 + kRangeSlack)
    throw std::invalid_argument("minimal_interaction_angles: fidelity above 1");
  if (fidelity < bound - kRangeSlack) throw FidelityTooLowError(d, fidelity, bound);
  const double f = std::clamp(fidelity, bound, 1.0);
  const double d3 = static_cast<double>(d) * d * d;

  const double cos_phi0 =
      -0.5 * (static_cast<double>(d) * d - 2.0) *
      std::sqrt((1.0 - f) / ((static_cast<double>(d) * d - 1.0) * f - d + 1.0));
  const double cos_theta0 = -std::sqrt(d3 * (1.0 - f) / (4.0 * (d - 1.0)));
  const double cos_theta = 1.0 - d3 * (1.0 - f) / (2.0 * (d - 1.0));

  MinimalInteractionAngles ang;
  ang.phi0 = -std::acos(std::clamp(cos_phi0, -1.0, 1.0));
  ang.theta0 = -std::acos(std::clamp(cos_theta0, -1.0, 1.0));
  ang.theta = std::acos(std::clamp(cos_theta, -1.0, 1.0));

  // Branch consistency: the unitary form must reproduce the coupling
  // coefficients alpha(phi0) and beta on the input subspace.
  const MachineParams p0 = params_from_fidelity(d, f, ang.phi0);
  const Complex e0 = Complex(std::cos(ang.theta0), std::sin(ang.theta0));
  const Complex et = Complex(std::cos(ang.theta), std::sin(ang.theta));
  if (std::abs(e0 - p0.alpha) > kTolEig ||
      std::abs(e0 * (et - 1.0) / static_cast<double>(d) - p0.b * d) > kTolEig)
    throw std::logic_error("minimal_interaction_angles: inconsistent sign branch");
  return ang;
}

OperatorMatrix minimal_interaction_unitary(const MachineParams& p) {
  const int d = p.d;
  const MinimalInteractionAngles ang = minimal_interaction_angles(d, p.fidelity);
  const PureState psi00 = bell_state(BellIndex(d, 0, 0));
  const Matrix proj = psi00.amps * psi00.amps.adjoint();
  const Matrix eye_d = Matrix::Identity(d, d);
  const long long dd = static_cast<long long>(d) * d;

  const auto phase_exp = [&](const Matrix& projector, double angle) {
    // exp(i angle P) = I + (e^{i angle} - 1) P for a projector P
    const Complex c = Complex(std::cos(angle), std::sin(angle)) - 1.0;
    return Matrix(Matrix::Identity(projector.rows(), projector.cols()) + c * projector);
  };

  const Matrix p_sx = [&] {
    Matrix m(dd * d, dd * d);
    for (long long i = 0; i < dd; ++i)
      for (long long j = 0; j < dd; ++j) m.block(i * d, j * d, d, d) = proj(i, j) * eye_d;
    return m;
  }();
  const Matrix p_xy = [&] {
    Matrix m = Matrix::Zero(d * dd, d * dd);
    for (int k = 0; k < d; ++k) m.block(k * dd, k * dd, dd, dd) = proj;
    return m;
  }();

  const Complex global = Complex(std::cos(ang.theta0), std::sin(ang.theta0));
  Matrix u = global * (phase_exp(p_xy, p.phi - ang.phi0) * phase_exp(p_sx, ang.theta));
  return OperatorMatrix({d, d, d}, std::move(u));
}

OptimalityScanResult optimality_scan(int d, double fidelity, long long trials, std::uint64_t seed) {
  require_dim(d);
  if (trials < 1) throw std::invalid_argument("optimality_scan: trials must be >= 1");
  const double fmin = 1.0 / d;
  if (fidelity < fmin - kRangeSlack || fidelity > 1.0 + kRangeSlack)
    throw std::invalid_argument("optimality_scan: fidelity outside [1/d, 1]");
  const double f = std::clamp(fidelity, fmin, 1.0);

  OptimalityScanResult res;
  res.bound = optimal_entanglement(d, f);
  res.trials = trials;
  res.accepted = 0;
  res.seed = seed;

  // The analytic optimum: lambda^2 = (F, (1-F)/(d-1), ...), input weight on
  // the first Schmidt vector. Evaluated as a configuration, not as h_d.
  std::vector<double> lam_opt(d, (1.0 - f) / (d - 1.0));
  lam_opt[0] = f;
  res.max_entanglement = shannon_entropy(lam_opt);
  ++res.accepted;

  std::vector<double> lam(d), c(d);
  for (long long t = 0; t < trials; ++t) {
    CounterRng rng(CounterRng::derive(seed, static_cast<std::uint64_t>(t)));
    double ls = 0.0, cs = 0.0;
    for (int k = 0; k < d; ++k) {
      lam[k] = -std::log(1.0 - rng.uniform());  // Dirichlet(1,...,1) via exponentials
      c[k] = -std::log(1.0 - rng.uniform());
      ls += lam[k];
      cs += c[k];
    }
    for (int k = 0; k < d; ++k) {
      lam[k] /= ls;
      c[k] /= cs;
    }
    std::sort(lam.begin(), lam.end(), std::greater<>());

    double s = 0.0;
    for (int k = 0; k < d; ++k) s += lam[k] * c[k];

    // Slide the input weights toward the vertex that can reach F; reject
    // draws whose Schmidt profile cannot support the target fidelity.
    if (f > s) {
      if (lam[0] < f || lam[0] - s < 1e-15) continue;
      const double t1 = (f - s) / (lam[0] - s);
      for (int k = 0; k < d; ++k) c[k] *= (1.0 - t1);
      c[0] += t1;
    } else if (f < s) {
      if (lam[d - 1] > f || s - lam[d - 1] < 1e-15) continue;
      const double t1 = (s - f) / (s - lam[d - 1]);
      for (int k = 0; k < d; ++k) c[k] *= (1.0 - t1);
      c[d - 1] += t1;
    }
    ++res.accepted;
    res.max_entanglement = std::max(res.max_entanglement, shannon_entropy(lam));
  }
  return res;
}

}  // namespace auem
