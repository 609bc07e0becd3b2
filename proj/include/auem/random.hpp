#pragma once

#include <cstdint>

#include "auem/types.hpp"

namespace auem {

// Counter-based generator: output i is a pure function of (seed, stream, i)
// via SplitMix64 mixing, so streams can be split per trial and merged in any
// order. Every stochastic test logs the seed it was run with.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();
  double uniform();   // [0, 1)
  double gaussian();  // standard normal (Box-Muller)
  Complex gaussian_complex();

  // Independent sub-seed for a derived stream (per-trial parallel splits).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Normalized complex Gaussian vector: unitarily invariant on the sphere.
PureState haar_random_state(int d, std::uint64_t seed);

// QR of a complex Gaussian matrix with the R diagonal phase-fixed.
OperatorMatrix haar_random_unitary(int d, std::uint64_t seed);

}  // namespace auem
