#include "auem/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "auem/circuit.hpp"
#include "auem/machine.hpp"
#include "auem/measures.hpp"
#include "auem/qkd.hpp"
#include "auem/qudit.hpp"
#include "auem/random.hpp"
#include "auem/tensor.hpp"

namespace auem {
namespace {

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.cwiseAbs().maxCoeff();
}

void add(SuiteReport& r, std::string name, double residual, double tol) {
  r.checks.push_back({std::move(name), residual, tol, residual <= tol});
}

std::string label(const char* suite, int d) { return std::string(suite) + " (d=" + std::to_string(d) + ")"; }

std::string label(const char* suite, int d, double f, double phi) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s (d=%d, F=%.6g, phi=%.6g)", suite, d, f, phi);
  return buf;
}

Matrix conj_unitary_triple(const Matrix& u) {
  const int d = static_cast<int>(u.rows());
  Matrix uu = Matrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) uu.block(i * d, j * d, d, d) = u(i, j) * u.conjugate();
  Matrix out = Matrix::Zero(d * d * d, d * d * d);
  for (int i = 0; i < d * d; ++i)
    for (int j = 0; j < d * d; ++j) out.block(i * d, j * d, d, d) = uu(i, j) * u;
  return out;  // U x U* x U
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

double SuiteReport::max_residual() const {
  double m = 0.0;
  for (const Check& c : checks) m = std::max(m, c.residual);
  return m;
}

SuiteReport verify_algebra(int d) {
  SuiteReport r{label("algebra", d), {}};
  const long long dd = static_cast<long long>(d) * d;

  double worst = 0.0;
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n)
      worst = std::max(worst, unitarity_residual(weyl_operator(BellIndex(d, m, n)).mat));
  add(r, "weyl operators unitary", worst, kTolAlg);

  // composition U_{m,n} U_{k,l} = e^{2 pi i n k / d} U_{m+k, n+l}
  worst = 0.0;
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          const Matrix lhs =
              weyl_operator(BellIndex(d, m, n)).mat * weyl_operator(BellIndex(d, k, l)).mat;
          const Matrix rhs = root_of_unity(d, static_cast<long long>(n) * k) *
                             weyl_operator(BellIndex(d, m + k, n + l)).mat;
          worst = std::max(worst, max_abs(lhs - rhs));
        }
  add(r, "weyl composition phases", worst, kTolAlg);

  // Bell states from one-sided Weyl operators, both sides
  worst = 0.0;
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) {
      const Vector ref = bell_state(BellIndex(d, m, n)).amps;
      worst = std::max(worst, max_abs(bell_from_weyl(BellIndex(d, m, n), Side::kRight).amps - ref));
      worst = std::max(worst, max_abs(bell_from_weyl(BellIndex(d, m, n), Side::kLeft).amps - ref));
    }
  add(r, "bell states from one-sided weyl", worst, kTolAlg);

  // Bell basis Gram matrix
  Matrix gram(dd, dd);
  std::vector<PureState> bells;
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) bells.push_back(bell_state(BellIndex(d, m, n)));
  for (long long i = 0; i < dd; ++i)
    for (long long j = 0; j < dd; ++j) gram(i, j) = bells[i].amps.dot(bells[j].amps);
  add(r, "bell basis orthonormal", max_abs(Matrix(gram - Matrix::Identity(dd, dd))), kTolAlg);

  // twirl of a random density operator
  {
    const PureState probe = haar_random_state(d, 20240u + static_cast<unsigned>(d));
    DensityOperator rho = density_from_pure(probe);
    const Matrix sum = weyl_twirl_sum(rho).mat;
    add(r, "weyl twirl is I tr(rho)", max_abs(Matrix(sum - Matrix::Identity(d, d))), kTolAlg);
  }

  // eigenphases of U_{m,n} x U_{m,-n} on every Bell state
  worst = 0.0;
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l)
      for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) {
          const Complex got = bell_eigenphase(BellIndex(d, k, l), BellIndex(d, m, n));
          const Complex want = root_of_unity(d, -(static_cast<long long>(n) * k + static_cast<long long>(m) * l));
          worst = std::max(worst, std::abs(got - want));
        }
  add(r, "bell eigenphases", worst, kTolAlg);

  {
    const PureState psi00 = bell_state(BellIndex(d, 0, 0));
    const Matrix want = static_cast<double>(dd) * (psi00.amps * psi00.amps.adjoint());
    add(r, "weyl pair sum projects on psi00", max_abs(Matrix(weyl_pair_sum(d).mat - want)), kTolAlg);
  }
  return r;
}

SuiteReport verify_channel(int d, double fidelity, double phi, int samples, std::uint64_t seed) {
  SuiteReport r{label("channel", d, fidelity, phi), {}};
  const MachineParams p = params_from_fidelity(d, fidelity, phi);
  const auto kraus = kraus_operators(p);
  const auto phis = ancilla_basis(p);

  Matrix completeness = Matrix::Zero(d, d);
  for (const auto& k : kraus) completeness += k.mat.adjoint() * k.mat;
  add(r, "kraus completeness", max_abs(Matrix(completeness - Matrix::Identity(d, d))), kTolAlg);

  Matrix gram(phis.size(), phis.size());
  for (std::size_t i = 0; i < phis.size(); ++i)
    for (std::size_t j = 0; j < phis.size(); ++j) gram(i, j) = phis[i].amps.dot(phis[j].amps);
  add(r, "ancilla basis orthonormal",
      max_abs(Matrix(gram - Matrix::Identity(gram.rows(), gram.cols()))), kTolAlg);

  double worst_kraus = 0.0, worst_trace = 0.0, worst_reconstruct = 0.0, worst_fid = 0.0;
  for (int s = 0; s < samples; ++s) {
    const PureState psi = haar_random_state(d, CounterRng::derive(seed, s));
    const DensityOperator direct = depolarize(p, psi);

    Matrix kraus_sum = Matrix::Zero(d, d);
    const Matrix proj = psi.amps * psi.amps.adjoint();
    for (const auto& k : kraus) kraus_sum += k.mat * proj * k.mat.adjoint();
    worst_kraus = std::max(worst_kraus, max_abs(Matrix(kraus_sum - direct.mat)));

    const PureState out = apply_machine(p, psi);
    const DensityOperator traced = partial_trace(density_from_pure(out), {0});
    worst_trace = std::max(worst_trace, max_abs(Matrix(traced.mat - direct.mat)));

    Vector rebuilt = Vector::Zero(out.dim());
    for (std::size_t i = 0; i < kraus.size(); ++i) {
      const Vector kpsi = kraus[i].mat * psi.amps;
      for (int sig = 0; sig < d; ++sig)
        rebuilt.segment(static_cast<long long>(sig) * d * d, static_cast<long long>(d) * d) +=
            kpsi(sig) * phis[i].amps;
    }
    worst_reconstruct = std::max(worst_reconstruct, max_abs(Vector(rebuilt - out.amps)));

    worst_fid = std::max(worst_fid, std::abs(fidelity - auem::fidelity(psi, direct)));
  }
  add(r, "kraus sum = depolarizing channel", worst_kraus, kTolAlg);
  add(r, "partial trace of output = channel", worst_trace, kTolAlg);
  add(r, "kraus x ancilla reconstruction", worst_reconstruct, kTolAlg);
  add(r, "channel fidelity = F", worst_fid, kTolAlg);
  return r;
}

SuiteReport verify_unitarity(int d, double fidelity, double phi) {
  SuiteReport r{label("unitarity", d, fidelity, phi), {}};
  const MachineParams p = params_from_fidelity(d, fidelity, phi);
  const OperatorMatrix u = machine_unitary(p);
  add(r, "U_M unitary", unitarity_residual(u.mat), kTolAlg);

  const PureState psi00 = bell_state(BellIndex(d, 0, 0));
  double worst = 0.0;
  for (int k = 0; k < d; ++k) {
    const PureState in = tensor_product(basis_state(d, k), psi00);
    worst = std::max(worst, max_abs(Vector(u.mat * in.amps - apply_machine(p, basis_state(d, k)).amps)));
  }
  add(r, "U_M acts as coupling operator on W", worst, kTolAlg);

  if (fidelity >= minimal_fidelity_bound(d) - 1e-12) {
    const OperatorMatrix v = minimal_interaction_unitary(p);
    add(r, "minimal form unitary", unitarity_residual(v.mat), kTolAlg);
    worst = 0.0;
    for (int k = 0; k < d; ++k) {
      const PureState in = tensor_product(basis_state(d, k), psi00);
      worst = std::max(worst,
                       max_abs(Vector(v.mat * in.amps - apply_machine(p, basis_state(d, k)).amps)));
    }
    add(r, "minimal form matches on W", worst, kTolAlg);
  }
  return r;
}

SuiteReport verify_covariance(int d, double fidelity, double phi, int samples, std::uint64_t seed) {
  SuiteReport r{label("covariance", d, fidelity, phi), {}};
  const MachineParams p = params_from_fidelity(d, fidelity, phi);
  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const PureState psi = haar_random_state(d, CounterRng::derive(seed, 2 * s));
    const OperatorMatrix u = haar_random_unitary(d, CounterRng::derive(seed, 2 * s + 1));
    const PureState rotated({d}, u.mat * psi.amps);
    const Vector lhs = apply_machine(p, rotated).amps;
    const Vector rhs = conj_unitary_triple(u.mat) * apply_machine(p, psi).amps;
    worst = std::max(worst, max_abs(Vector(lhs - rhs)));
  }
  add(r, "apply(U psi) = (U x U* x U) apply(psi)", worst, kTolAlg);
  return r;
}

SuiteReport verify_circuit(int samples, std::uint64_t seed) {
  SuiteReport r{"circuit", {}};
  const PureState phip = bell_state(BellIndex(2, 0, 0));

  double worst = 0.0, worst_eig = 0.0;
  for (int s = 0; s < samples; ++s) {
    CounterRng rng(CounterRng::derive(seed, 100 + s));
    const double theta = (2.0 * rng.uniform() - 1.0) * M_PI;
    const Matrix got = circuit_matrix(bell_phase_circuit(theta));
    Matrix want = std::polar(1.0, -theta / 4) *
                  (Matrix::Identity(4, 4) +
                   (std::polar(1.0, theta) - 1.0) * (phip.amps * phip.amps.adjoint()));
    worst = std::max(worst, max_abs(Matrix(got - want)));

    // every Bell state is an eigenstate
    for (int m = 0; m < 2; ++m)
      for (int n = 0; n < 2; ++n) {
        const Vector b = bell_state(BellIndex(2, m, n)).amps;
        const Vector img = got * b;
        const Complex lam = b.dot(img);
        worst_eig = std::max(worst_eig, max_abs(Vector(img - lam * b)));
      }
  }
  add(r, "bell-phase gate matches projector exponential", worst, kTolAlg);
  add(r, "bell states are eigenstates", worst_eig, kTolAlg);

  worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    CounterRng rng(CounterRng::derive(seed, 500 + s));
    const double f = 0.5 + 0.5 * rng.uniform();
    const double phi = (2.0 * rng.uniform() - 1.0) * M_PI;
    const PureState psi = haar_random_state(2, rng.next_u64());
    const MachineParams p = params_from_fidelity(2, f, phi);

    const PureState in = tensor_product(psi, phip);
    const Vector got = apply_circuit(entangler_circuit(f, phi), in).amps;
    const Vector want = apply_machine(p, psi).amps;

    // align global phase on the largest amplitude of the reference
    Eigen::Index imax;
    want.cwiseAbs().maxCoeff(&imax);
    const Complex ratio = want(imax) / got(imax);
    worst = std::max(worst, max_abs(Vector(got * (ratio / std::abs(ratio)) - want)));
  }
  add(r, "entangler circuit matches closed form", worst, kTolEig);
  return r;
}

SuiteReport verify_qkd(const std::vector<double>& fidelities, const std::vector<double>& phis) {
  SuiteReport r{"qkd", {}};
  double worst_orth = 0.0, worst_re = 0.0, worst_norm = 0.0;
  for (double f : fidelities)
    for (double phi : phis) {
      const EveStates e = extract_eve_states(params_from_fidelity(2, f, phi));
      const EveReport rep = check_eve_states(e);
      for (const EveCheck& c : rep.checks) {
        if (c.name.find("Re<A|C>") != std::string::npos)
          worst_re = std::max(worst_re, c.residual);
        else if (c.name.find("= 1") != std::string::npos)
          worst_norm = std::max(worst_norm, c.residual);
        else
          worst_orth = std::max(worst_orth, c.residual);
      }
    }
  add(r, "eve orthogonality set", worst_orth, kTolAlg);
  add(r, "Re<A|C> = 2 - 1/F", worst_re, kTolEig);
  add(r, "eve state norms", worst_norm, kTolAlg);

  // mutually unbiased bases sanity
  const auto bases = six_state_bases();
  double worst_mub = 0.0;
  for (std::size_t i = 0; i < bases.size(); ++i)
    for (std::size_t j = 0; j < bases.size(); ++j) {
      if (i == j) continue;
      for (const PureState* u : {&bases[i].zero, &bases[i].one})
        for (const PureState* v : {&bases[j].zero, &bases[j].one})
          worst_mub = std::max(worst_mub, std::abs(std::norm(u->amps.dot(v->amps)) - 0.5));
    }
  add(r, "six-state bases mutually unbiased", worst_mub, kTolAlg);
  return r;
}

std::vector<SuiteReport> verify_all(std::uint64_t seed) {
  std::vector<SuiteReport> reports;
  for (int d : {2, 3}) reports.push_back(verify_algebra(d));
  int i = 0;
  for (int d : {2, 3}) {
    const double f = (d == 2) ? 5.0 / 6.0 : 0.8;
    reports.push_back(verify_channel(d, f, 0.0, 20, CounterRng::derive(seed, 10 + i)));
    reports.push_back(verify_unitarity(d, f, 0.0));
    reports.push_back(verify_unitarity(d, f, 1.1));
    reports.push_back(verify_covariance(d, f, 0.7, 20, CounterRng::derive(seed, 20 + i)));
    ++i;
  }
  reports.push_back(verify_circuit(20, CounterRng::derive(seed, 30)));
  std::vector<double> sweep;
  for (int k = 1; k <= 10; ++k) sweep.push_back(0.5 + 0.5 * k / 11.0);
  reports.push_back(verify_qkd(sweep, {0.0, 0.7, M_PI / 2}));
  return reports;
}

}  // namespace auem
