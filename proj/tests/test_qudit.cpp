#include <doctest.h>

#include "auem/qudit.hpp"
#include "auem/random.hpp"
#include "auem/tensor.hpp"

using namespace auem;

namespace {
double max_abs_diff(const Matrix& a, const Matrix& b) { return (a - b).cwiseAbs().maxCoeff(); }
}  // namespace

TEST_CASE("d=2 Bell states match the qubit Bell basis") {
  const double r = 1.0 / std::sqrt(2.0);
  Vector phip(4), phim(4), psip(4), psim(4);
  phip << r, 0, 0, r;
  phim << r, 0, 0, -r;
  psip << 0, r, r, 0;
  psim << 0, r, -r, 0;
  CHECK((bell_state(BellIndex(2, 0, 0)).amps - phip).cwiseAbs().maxCoeff() < kTolAlg);
  CHECK((bell_state(BellIndex(2, 0, 1)).amps - phim).cwiseAbs().maxCoeff() < kTolAlg);
  CHECK((bell_state(BellIndex(2, 1, 0)).amps - psip).cwiseAbs().maxCoeff() < kTolAlg);
  CHECK((bell_state(BellIndex(2, 1, 1)).amps - psim).cwiseAbs().maxCoeff() < kTolAlg);
}

TEST_CASE("Bell states are orthonormal") {
  for (int d : {2, 3, 4, 5}) {
    std::vector<PureState> states;
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n) states.push_back(bell_state(BellIndex(d, m, n)));
    const int dd = d * d;
    Matrix gram(dd, dd);
    for (int i = 0; i < dd; ++i)
      for (int j = 0; j < dd; ++j) gram(i, j) = states[i].amps.dot(states[j].amps);
    CHECK(max_abs_diff(gram, Matrix::Identity(dd, dd)) < kTolAlg);
  }
}

TEST_CASE("Weyl operators specialize to Pauli matrices at d=2") {
  CHECK(max_abs_diff(weyl_operator(BellIndex(2, 0, 0)).mat, Matrix::Identity(2, 2)) == 0.0);
  Matrix sz(2, 2), sx(2, 2), misy(2, 2);
  sz << 1, 0, 0, -1;
  sx << 0, 1, 1, 0;
  misy << 0, -1, 1, 0;  // -i sigma_y
  CHECK(max_abs_diff(weyl_operator(BellIndex(2, 0, 1)).mat, sz) < kTolAlg);
  CHECK(max_abs_diff(weyl_operator(BellIndex(2, 1, 0)).mat, sx) < kTolAlg);
  CHECK(max_abs_diff(weyl_operator(BellIndex(2, 1, 1)).mat, misy) < kTolAlg);
}

TEST_CASE("Weyl operators are unitary for all indices up to d=8") {
  for (int d = 2; d <= 8; ++d)
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n)
        CHECK(unitarity_residual(weyl_operator(BellIndex(d, m, n)).mat) < kTolAlg);
}

TEST_CASE("Weyl composition carries the phase e^{2 pi i n k / d}") {
  // single spot check plus the exhaustive sweep
  const Matrix lhs = weyl_operator(BellIndex(3, 1, 2)).mat * weyl_operator(BellIndex(3, 2, 1)).mat;
  const Matrix rhs = root_of_unity(3, 4) * weyl_operator(BellIndex(3, 0, 0)).mat;
  CHECK(max_abs_diff(lhs, rhs) < kTolAlg);

  for (int d = 2; d <= 5; ++d)
    for (int m = 0; m < d; ++m)
      for (int n = 0; n < d; ++n)
        for (int k = 0; k < d; ++k)
          for (int l = 0; l < d; ++l) {
            const Matrix prod =
                weyl_operator(BellIndex(d, m, n)).mat * weyl_operator(BellIndex(d, k, l)).mat;
            const Matrix want = root_of_unity(d, static_cast<long long>(n) * k) *
                                weyl_operator(BellIndex(d, m + k, n + l)).mat;
            CHECK(max_abs_diff(prod, want) < kTolAlg);
          }
}

TEST_CASE("one-sided Weyl operators generate every Bell state") {
  CHECK((bell_from_weyl(BellIndex(2, 0, 0), Side::kLeft).amps -
         bell_state(BellIndex(2, 0, 0)).amps)
            .cwiseAbs()
            .maxCoeff() < kTolAlg);
  CHECK((bell_from_weyl(BellIndex(2, 1, 0), Side::kRight).amps -
         bell_state(BellIndex(2, 1, 0)).amps)
            .cwiseAbs()
            .maxCoeff() < kTolAlg);

  const int d = 5;
  for (int m = 0; m < d; ++m)
    for (int n = 0; n < d; ++n) {
      const Vector ref = bell_state(BellIndex(d, m, n)).amps;
      for (Side side : {Side::kLeft, Side::kRight})
        CHECK((bell_from_weyl(BellIndex(d, m, n), side).amps - ref).cwiseAbs().maxCoeff() <
              kTolAlg);
    }
}

TEST_CASE("the Weyl twirl sum is I Tr(rho)") {
  const int d2 = 2;
  CHECK(max_abs_diff(weyl_twirl_sum(density_from_pure(basis_state(d2, 0))).mat,
                     Matrix::Identity(d2, d2)) < kTolAlg);

  const DensityOperator eye2({2}, Matrix::Identity(2, 2) / 2.0);
  CHECK(max_abs_diff(weyl_twirl_sum(eye2).mat, Matrix::Identity(2, 2)) < kTolAlg);

  const DensityOperator rho = density_from_pure(haar_random_state(4, 77));
  CHECK(max_abs_diff(weyl_twirl_sum(rho).mat, Matrix::Identity(4, 4)) < kTolAlg);
}

TEST_CASE("Bell eigenphases of U x U~") {
  CHECK(std::abs(bell_eigenphase(BellIndex(2, 0, 0), BellIndex(2, 1, 1)) - Complex(1.0)) < kTolAlg);
  CHECK(std::abs(bell_eigenphase(BellIndex(2, 1, 0), BellIndex(2, 0, 1)) - Complex(-1.0)) <
        kTolAlg);

  const int d = 3;
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l)
      for (int m = 0; m < d; ++m)
        for (int n = 0; n < d; ++n) {
          const Complex got = bell_eigenphase(BellIndex(d, k, l), BellIndex(d, m, n));
          CHECK(std::abs(std::abs(got) - 1.0) < kTolAlg);
          CHECK(std::abs(got - root_of_unity(d, -(static_cast<long long>(n) * k +
                                                  static_cast<long long>(m) * l))) < kTolAlg);
        }
}

TEST_CASE("sum of paired Weyl operators projects on psi00") {
  for (int d : {2, 3}) {
    const Matrix got = weyl_pair_sum(d).mat;
    const Vector psi00 = bell_state(BellIndex(d, 0, 0)).amps;
    CHECK(max_abs_diff(got, static_cast<double>(d * d) * (psi00 * psi00.adjoint())) < kTolAlg);

    const auto spectrum = eig_hermitian(Matrix(0.5 * (got + got.adjoint())));
    CHECK(spectrum[0].value == doctest::Approx(d * d).epsilon(1e-10));
    for (std::size_t i = 1; i < spectrum.size(); ++i) CHECK(std::abs(spectrum[i].value) < kTolEig);
  }
}

TEST_CASE("root_of_unity reduces its exponent in integer arithmetic") {
  for (int d = 2; d <= 7; ++d)
    for (long long k = 0; k < d; ++k) {
      const Complex base = root_of_unity(d, k);
      CHECK(root_of_unity(d, k + 17LL * d) == base);      // bitwise equal
      CHECK(root_of_unity(d, k - 23LL * d) == base);
    }
  // sum_n e^{2 pi i (j-k) n / d} = d delta_jk
  for (int d = 2; d <= 5; ++d)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) {
        Complex s = 0.0;
        for (int n = 0; n < d; ++n) s += root_of_unity(d, static_cast<long long>(j - k) * n);
        CHECK(std::abs(s - (j == k ? Complex(d) : Complex(0.0))) < kTolAlg);
      }
}

TEST_CASE("orthogonal state construction") {
  const PureState flip = orthogonal_state(basis_state(2, 0));
  CHECK(std::abs(flip.amps(0)) < kTolAlg);
  CHECK(std::abs(std::abs(flip.amps(1)) - 1.0) < kTolAlg);

  Vector v(2);
  v << 1.0 / std::sqrt(2.0), Complex(0.0, 1.0 / std::sqrt(2.0));
  const PureState psi({2}, v);
  CHECK(std::abs(psi.amps.dot(orthogonal_state(psi).amps)) < kTolAlg);

  for (int i = 0; i < 100; ++i) {
    const PureState s = haar_random_state(4, 300 + i);
    CHECK(std::abs(s.amps.dot(orthogonal_state(s).amps)) < kTolAlg);
  }

  CHECK_THROWS_AS(orthogonal_state(haar_random_state(3, 1)), std::invalid_argument);
}
