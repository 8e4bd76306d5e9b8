#pragma once

// Seeded random instances for audits and property tests.

#include <cstdint>
#include <random>

#include "qig/spectral.hpp"
#include "qig/weight.hpp"

namespace qig {

/// SplitMix64 finalizer; used to derive independent per-instance streams.
std::uint64_t mix_seed(std::uint64_t x);

/// One generator per (seed, stream) pair, so instance i of an ensemble does
/// not depend on how many instances ran before it or on which thread.
class InstanceRng {
 public:
  InstanceRng(std::uint64_t seed, std::uint64_t stream);

  double normal();
  double uniform(double lo, double hi);
  /// Uniform integer in [lo, hi].
  int uniform_int(int lo, int hi);

 private:
  std::mt19937_64 engine_;
};

/// (G + G^dagger) / 2 with G having i.i.d. complex Gaussian entries of unit
/// variance, times `scale`.
HermitianOperator random_hermitian(Index n, InstanceRng& rng, double scale = 1.0);

/// Default spread of log-eigenvalues of random states: the generator G in
/// rho = exp(-G) / Tr has spectrum roughly in [-2 spread, 2 spread].
inline constexpr double kDefaultStateSpread = 1.5;

/// exp(-G) / Tr exp(-G) with G = spread * random_hermitian / sqrt(n). Built
/// from the matrix through the ordinary FiniteWeight constructor so that a
/// dumped instance replays bit for bit.
DensityState random_state(Index n, InstanceRng& rng, double spread = kDefaultStateSpread);

/// Random Hermitian X rescaled so that araki_norm(X, rho) == target.
HermitianOperator random_perturbation(const FiniteWeight& rho, InstanceRng& rng, double target);

}  // namespace qig
