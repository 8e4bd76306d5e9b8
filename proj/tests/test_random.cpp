#include <gtest/gtest.h>

#include "qig/norms.hpp"
#include "qig/random.hpp"

using namespace qig;

TEST(InstanceRng, StreamsAreReproducibleAndDistinct) {
  InstanceRng a(5, 3), b(5, 3), c(5, 4), d(6, 3);
  const double va = a.normal();
  EXPECT_EQ(va, b.normal());
  EXPECT_NE(va, c.normal());
  EXPECT_NE(va, d.normal());
  EXPECT_NE(mix_seed(1), mix_seed(2));
}

TEST(InstanceRng, Ranges) {
  InstanceRng rng(7, 0);
  double mean = 0.0, sq = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform(-1.0, 2.0);
    EXPECT_GE(u, -1.0);
    EXPECT_LT(u, 2.0);
    const int k = rng.uniform_int(3, 5);
    EXPECT_GE(k, 3);
    EXPECT_LE(k, 5);
    const double z = rng.normal();
    mean += z;
    sq += z * z;
  }
  EXPECT_NEAR(mean / n, 0.0, 0.05);
  EXPECT_NEAR(sq / n, 1.0, 0.05);
}

TEST(RandomInstances, StatesAndPerturbations) {
  InstanceRng rng(8, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const Index n = rng.uniform_int(2, 8);
    const auto rho = random_state(n, rng);
    EXPECT_NEAR(rho.trace(), 1.0, 1e-12);
    EXPECT_GT(rho.min_eigenvalue(), 0.0);
    const double target = rng.uniform(0.01, 3.0);
    const auto x = random_perturbation(rho, rng, target);
    EXPECT_NEAR(araki_norm(x, rho), target, 1e-12 * target);
  }
  InstanceRng again(8, 0);
  InstanceRng first(8, 0);
  (void)again.uniform_int(2, 8);
  (void)first.uniform_int(2, 8);
  EXPECT_EQ(random_state(4, again).matrix(), random_state(4, first).matrix());
  EXPECT_EQ(random_perturbation(DensityState::maximally_mixed(3), rng, 0.0).frobenius_norm(), 0.0);
}
