#include "qig/random.hpp"

#include <cmath>

#include "qig/norms.hpp"

namespace qig {

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

InstanceRng::InstanceRng(std::uint64_t seed, std::uint64_t stream)
    : engine_(mix_seed(seed ^ mix_seed(stream))) {}

double InstanceRng::normal() {
  // Box-Muller on two 53-bit uniforms; independent of the standard library's
  // normal_distribution so streams are identical across toolchains.
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  const double u1 = (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  const double u2 = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
}

double InstanceRng::uniform(double lo, double hi) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

int InstanceRng::uniform_int(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

HermitianOperator random_hermitian(Index n, InstanceRng& rng, double scale) {
  Matrix g(n, n);
  const double s = 1.0 / std::sqrt(2.0);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) g(i, j) = Complex(rng.normal() * s, rng.normal() * s);
  return HermitianOperator(g) * scale;
}

DensityState random_state(Index n, InstanceRng& rng, double spread) {
  const HermitianOperator g = random_hermitian(n, rng, spread / std::sqrt(static_cast<double>(n)));
  const SpectralDecomposition d = eig(g);
  const double bottom = d.min();
  const HermitianOperator w = d.apply([bottom](double x) { return std::exp(bottom - x); });
  return DensityState(HermitianOperator(w.matrix() / w.trace()));
}

HermitianOperator random_perturbation(const FiniteWeight& rho, InstanceRng& rng, double target) {
  if (!(target >= 0.0)) throw InvalidArgument("random_perturbation: target must be >= 0");
  HermitianOperator x = random_hermitian(rho.dim(), rng);
  const double a = araki_norm(x, rho);
  return a > 0.0 ? x * (target / a) : x;
}

}  // namespace qig
