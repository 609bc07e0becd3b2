#include <doctest.h>

#include "auem/machine.hpp"
#include "auem/qudit.hpp"
#include "auem/random.hpp"
#include "auem/tensor.hpp"

using namespace auem;

namespace {

double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

// Independent partial-trace oracle: direct sum over the traced multi-index,
// written against the composite-index formula rather than the library path.
Matrix traced_by_loops(const Matrix& rho, const std::vector<int>& dims, int keep) {
  // keeps exactly one subsystem of a 3-subsystem state
  const int d0 = dims[0], d1 = dims[1], d2 = dims[2];
  const auto idx = [&](int i, int j, int k) { return (i * d1 + j) * d2 + k; };
  const int dk = dims[keep];
  Matrix out = Matrix::Zero(dk, dk);
  for (int a = 0; a < dk; ++a)
    for (int b = 0; b < dk; ++b)
      for (int u = 0; u < (keep == 0 ? d1 : d0); ++u)
        for (int v = 0; v < (keep == 2 ? d1 : d2); ++v) {
          int r, c;
          if (keep == 0) {
            r = idx(a, u, v);
            c = idx(b, u, v);
          } else if (keep == 1) {
            r = idx(u, a, v);
            c = idx(u, b, v);
          } else {
            r = idx(u, v, a);
            c = idx(u, v, b);
          }
          out(a, b) += rho(r, c);
        }
  return out;
}

}  // namespace

TEST_CASE("tensor product identities") {
  const OperatorMatrix i2 = identity_op({2});
  const OperatorMatrix i4 = tensor_product(i2, i2);
  CHECK(i4.dims == std::vector<int>{2, 2});
  CHECK(max_abs_diff(i4.mat, Matrix::Identity(4, 4)) == 0.0);

  const PureState ket01 = tensor_product(basis_state(2, 0), basis_state(2, 1));
  for (int i = 0; i < 4; ++i) CHECK(std::abs(ket01.amps(i) - (i == 1 ? 1.0 : 0.0)) == 0.0);
}

TEST_CASE("tensor product entries match the index formula") {
  const Matrix sx = weyl_operator(BellIndex(2, 1, 0)).mat;
  const Matrix sz = weyl_operator(BellIndex(2, 0, 1)).mat;
  const Matrix prod = tensor_product(OperatorMatrix({2}, sx), OperatorMatrix({2}, sz)).mat;
  for (int ia = 0; ia < 2; ++ia)
    for (int ja = 0; ja < 2; ++ja)
      for (int ib = 0; ib < 2; ++ib)
        for (int jb = 0; jb < 2; ++jb)
          CHECK(std::abs(prod(ia * 2 + ib, ja * 2 + jb) - sx(ia, ja) * sz(ib, jb)) == 0.0);
}

TEST_CASE("partial trace of a product state") {
  const PureState psi = haar_random_state(3, 11);
  const DensityOperator rho_a = density_from_pure(haar_random_state(4, 12));
  const DensityOperator joint = tensor_product(density_from_pure(psi), rho_a);
  const DensityOperator reduced = partial_trace(joint, {0});
  CHECK(max_abs_diff(reduced.mat, density_from_pure(psi).mat) < kTolAlg);

  // maximally entangled marginal
  const DensityOperator bell = density_from_pure(bell_state(BellIndex(2, 0, 0)));
  CHECK(max_abs_diff(partial_trace(bell, {1}).mat, 0.5 * Matrix::Identity(2, 2)) < kTolAlg);
}

TEST_CASE("partial trace matches the double-loop oracle") {
  const PureState psi = haar_random_state(8, 21);
  const DensityOperator rho({2, 2, 2}, psi.amps * psi.amps.adjoint());
  for (int keep = 0; keep < 3; ++keep) {
    const Matrix want = traced_by_loops(rho.mat, rho.dims, keep);
    CHECK(max_abs_diff(partial_trace(rho, {keep}).mat, want) < kTolAlg);
  }
}

TEST_CASE("reduced density of a pure state agrees with the traced projector") {
  const PureState psi({2, 3, 2}, haar_random_state(12, 26).amps);
  const DensityOperator full = density_from_pure(psi);
  for (const auto& keep : {std::vector<int>{0}, {1}, {2}, {0, 2}, {1, 2}}) {
    const DensityOperator direct = reduced_density(psi, keep);
    const DensityOperator traced = partial_trace(full, keep);
    CHECK(direct.dims == traced.dims);
    CHECK(max_abs_diff(direct.mat, traced.mat) < kTolAlg);
  }
  CHECK_THROWS_AS(reduced_density(psi, {}), std::invalid_argument);
  CHECK_THROWS_AS(reduced_density(psi, {0, 1, 2}), std::invalid_argument);
}

TEST_CASE("partial trace rejects empty and full keep sets") {
  const DensityOperator rho = density_from_pure(bell_state(BellIndex(2, 0, 0)));
  CHECK_THROWS_AS(partial_trace(rho, {}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(rho, {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(rho, {2}), std::invalid_argument);
}

TEST_CASE("partial trace absorbs a traced tensor factor") {
  const DensityOperator a = density_from_pure(haar_random_state(3, 31));
  const DensityOperator b = density_from_pure(haar_random_state(2, 32));
  const DensityOperator joint = tensor_product(a, b);
  CHECK(max_abs_diff(partial_trace(joint, {0}).mat, a.mat) < kTolAlg);  // Tr(b) = 1
}

TEST_CASE("hermitian eigendecomposition") {
  const auto sz = eig_hermitian(weyl_operator(BellIndex(2, 0, 1)));
  CHECK(sz[0].value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sz[1].value == doctest::Approx(-1.0).epsilon(1e-12));

  const int d = 4;
  const auto flat = eig_hermitian(Matrix(Matrix::Identity(d, d) / d));
  for (const auto& p : flat) CHECK(std::abs(p.value - 1.0 / d) < kTolEig);

  // depolarized |0> at d = 3, pi_s = 0.3: spectrum {0.8, 0.1, 0.1}
  const MachineParams p = params_from_fidelity(3, 0.8, 0.0);
  CHECK(p.pi_s == doctest::Approx(0.3).epsilon(1e-12));
  const auto spectrum = eig_hermitian(depolarize(p, basis_state(3, 0)).mat);
  CHECK(spectrum[0].value == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(spectrum[1].value == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(spectrum[2].value == doctest::Approx(0.1).epsilon(1e-12));

  CHECK_THROWS_AS(eig_hermitian(weyl_operator(BellIndex(3, 1, 0))), std::invalid_argument);
}

TEST_CASE("eigendecomposition reconstructs the matrix") {
  const PureState psi = haar_random_state(6, 41);
  Matrix h = psi.amps * psi.amps.adjoint();
  h += 0.3 * Matrix::Identity(6, 6);
  h /= std::real(h.trace());
  Matrix rebuilt = Matrix::Zero(6, 6);
  for (const auto& p : eig_hermitian(h)) rebuilt += p.value * (p.vector * p.vector.adjoint());
  CHECK(max_abs_diff(rebuilt, h) < kTolEig);
}

TEST_CASE("orthonormal completion") {
  // a full basis leaves nothing to add
  std::vector<PureState> full;
  for (int k = 0; k < 3; ++k) full.push_back(basis_state(3, k));
  CHECK(complete_orthonormal(full).empty());

  const auto rest = complete_orthonormal({basis_state(2, 0)});
  REQUIRE(rest.size() == 1);
  CHECK(std::abs(rest[0].amps(0)) < kTolAlg);
  CHECK(std::abs(std::abs(rest[0].amps(1)) - 1.0) < kTolAlg);

  Vector skewed(2);
  skewed << 0.9, 0.1;
  const PureState not_orthogonal({2}, skewed.normalized());
  CHECK_THROWS_AS(complete_orthonormal({basis_state(2, 0), not_orthogonal}),
                  std::invalid_argument);
}

TEST_CASE("completion of the machine input subspace has identity Gram") {
  const MachineParams p = params_from_fidelity(2, 5.0 / 6.0, 0.0);
  const PureState psi00 = bell_state(BellIndex(2, 0, 0));
  std::vector<PureState> images;
  for (int k = 0; k < 2; ++k) images.push_back(apply_machine(p, basis_state(2, k)));
  const auto rest = complete_orthonormal(images);
  CHECK(rest.size() == 6);

  std::vector<Vector> all;
  for (const auto& s : images) all.push_back(s.amps);
  for (const auto& s : rest) all.push_back(s.amps);
  Matrix gram(8, 8);
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) gram(i, j) = all[i].dot(all[j]);
  CHECK(max_abs_diff(gram, Matrix::Identity(8, 8)) < kTolAlg);
}

TEST_CASE("haar random state: norm, determinism, first-moment") {
  for (int d : {2, 3, 5}) {
    const PureState s = haar_random_state(d, 7);
    CHECK(std::abs(s.norm() - 1.0) < kTolAlg);
  }
  const PureState a = haar_random_state(4, 99), b = haar_random_state(4, 99);
  CHECK((a.amps - b.amps).cwiseAbs().maxCoeff() == 0.0);  // bitwise reproducible

  double mean = 0.0;
  const int n = 10000;
  for (int i = 0; i < n; ++i) mean += std::norm(haar_random_state(2, 1000 + i).amps(0));
  mean /= n;
  CHECK(std::abs(mean - 0.5) < 0.02);
}

TEST_CASE("haar random unitary: unitarity, determinism, Gram preservation") {
  for (int d : {2, 3, 6}) {
    const OperatorMatrix u = haar_random_unitary(d, 17);
    CHECK(unitarity_residual(u.mat) < kTolAlg);
  }
  CHECK((haar_random_unitary(3, 5).mat - haar_random_unitary(3, 5).mat).cwiseAbs().maxCoeff() ==
        0.0);

  const OperatorMatrix u = haar_random_unitary(4, 23);
  Matrix gram(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) gram(i, j) = u.mat.col(i).dot(u.mat.col(j));
  CHECK(max_abs_diff(gram, Matrix::Identity(4, 4)) < kTolAlg);
}
