#include "auem/random.hpp"

#include <cmath>

namespace auem {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(seed + kGolden) ^ mix64(stream * kGolden + 1)) {}

std::uint64_t CounterRng::next_u64() { return mix64(key_ + (++counter_) * kGolden); }

double CounterRng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double CounterRng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // u1 in (0, 1] so the log is finite
  const double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * M_PI * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

Complex CounterRng::gaussian_complex() {
  const double re = gaussian();
  const double im = gaussian();
  return Complex(re, im);
}

std::uint64_t CounterRng::derive(std::uint64_t seed, std::uint64_t stream) {
  return mix64(mix64(seed + kGolden) + stream * kGolden);
}

PureState haar_random_state(int d, std::uint64_t seed) {
  if (d < 2) throw std::invalid_argument("haar_random_state requires d >= 2");
  CounterRng rng(seed);
  Vector v(d);
  for (int k = 0; k < d; ++k) v(k) = rng.gaussian_complex();
  v /= v.norm();
  return PureState({d}, std::move(v));
}

OperatorMatrix haar_random_unitary(int d, std::uint64_t seed) {
  if (d < 2) throw std::invalid_argument("haar_random_unitary requires d >= 2");
  CounterRng rng(seed, 1);
  Matrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = rng.gaussian_complex();
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < d; ++k) {
    const Complex rkk = r(k, k);
    const double m = std::abs(rkk);
    q.col(k) *= (m > 0.0) ? rkk / m : Complex(1.0);
  }
  return OperatorMatrix({d}, std::move(q));
}

}  // namespace auem
