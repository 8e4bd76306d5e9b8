#include <gtest/gtest.h>

#include "qig/norms.hpp"
#include "qig/random.hpp"
#include "support.hpp"

using namespace qig;

namespace {

HermitianOperator sx() { return HermitianOperator(oracle::pauli_x()); }
DensityState worked_rho() { return DensityState(HermitianOperator(oracle::diag({0.8, 0.2}))); }

}  // namespace

TEST(Schatten, Examples) {
  EXPECT_NEAR(schatten_p_norm(worked_rho().op(), 1.0), 1.0, 1e-15);
  EXPECT_DOUBLE_EQ(schatten_p_norm(HermitianOperator(oracle::diag({3, -4})), 1.0), 7.0);
  EXPECT_DOUBLE_EQ(schatten_p_norm(HermitianOperator(oracle::diag({1, 1})), 0.5), 4.0);
  EXPECT_NEAR(schatten_p_norm(HermitianOperator(oracle::diag({3, -4})), 2.0), 5.0, 1e-15);
  EXPECT_THROW(schatten_p_norm(sx(), 0.0), InvalidArgument);
  EXPECT_DOUBLE_EQ(schatten_p_norm(HermitianOperator::zero(3), 2.0), 0.0);
}

TEST(Schatten, NoOverflowForLargeEntries) {
  EXPECT_NEAR(schatten_p_norm(HermitianOperator(oracle::diag({1e200, 1e200})), 2.0),
              std::sqrt(2.0) * 1e200, 1e186);
}

TEST(TraceNorm, Examples) {
  const HermitianOperator d(oracle::diag({0.8 - 0.2, 0.2 - 0.8}));
  EXPECT_NEAR(trace_norm(d), 1.2, 1e-15);
  EXPECT_EQ(trace_norm(HermitianOperator::zero(2)), 0.0);
}

TEST(TraceNorm, EqualsSumOfSingularValues) {
  InstanceRng rng(31, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_hermitian(rng.uniform_int(1, 8), rng);
    EXPECT_NEAR(trace_norm(a), oracle::trace_norm(a.matrix()), 1e-12 * trace_norm(a));
  }
}

TEST(EpsilonNorm, Examples) {
  // Base diag(1, e^{-3}) has H0 = diag(0, 3).
  const FiniteWeight base(HermitianOperator(oracle::diag({1.0, std::exp(-3.0)})));
  EXPECT_NEAR(epsilon_norm(sx(), EpsilonNormParams(0.5, base)), 0.5, 1e-14);
  EXPECT_NEAR(epsilon_norm(sx(), EpsilonNormParams(0.0, base)), 1.0, 1e-14);
  const FiniteWeight flat(HermitianOperator(oracle::diag({0.3, 0.3})));
  InstanceRng rng(32, 0);
  const auto x = random_hermitian(2, rng);
  for (double eps : {0.0, 0.2, 0.5}) {
    EXPECT_NEAR(epsilon_norm(x, EpsilonNormParams(eps, flat)), operator_norm(x), 1e-14);
  }
  EXPECT_THROW(EpsilonNormParams(0.6, base), InvalidArgument);
  EXPECT_THROW(EpsilonNormParams(-0.1, base), InvalidArgument);
}

TEST(EpsilonNorm, FiniteOverWholeRange) {
  InstanceRng rng(33, 0);
  const auto rho = random_state(6, rng);
  const auto x = random_hermitian(6, rng);
  for (int k = 0; k <= 10; ++k) {
    const double v = epsilon_norm(x, EpsilonNormParams(0.05 * k, rho));
    EXPECT_TRUE(std::isfinite(v));
    EXPECT_GT(v, 0.0);
  }
}

TEST(ArakiNorm, WorkedExample) {
  EXPECT_NEAR(araki_norm(sx(), worked_rho()), 2.0, 1e-12);
  EXPECT_NEAR(oracle::araki_scan(oracle::pauli_x(), oracle::diag({0.8, 0.2}), 1001), 2.0, 1e-12);
}

TEST(ArakiNorm, ScalarsAndFlatBase) {
  InstanceRng rng(34, 0);
  const auto rho = random_state(5, rng);
  EXPECT_NEAR(araki_norm(HermitianOperator::identity(5) * -2.5, rho), 2.5, 1e-12);
  EXPECT_NEAR(araki_norm_scan(HermitianOperator::identity(5) * 1.5, rho, 11), 1.5, 1e-12);
  const auto flat = DensityState::maximally_mixed(5);
  const auto x = random_hermitian(5, rng);
  EXPECT_NEAR(araki_norm(x, flat), operator_norm(x), 1e-12);
}

TEST(ArakiNorm, MatchesDenseGridScan) {
  InstanceRng rng(35, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const Index n = rng.uniform_int(2, 6);
    const auto rho = random_state(n, rng);
    const auto x = random_hermitian(n, rng);
    const double a = araki_norm(x, rho);
    EXPECT_NEAR(a, oracle::araki_scan(x.matrix(), rho.matrix(), 401), 1e-10 * a);
    EXPECT_NEAR(a, araki_norm_scan(x, rho, 10001), 1e-6 * a);
  }
}

TEST(ArakiNorm, NormAxioms) {
  InstanceRng rng(36, 0);
  for (int trial = 0; trial < 50; ++trial) {
    const Index n = rng.uniform_int(2, 8);
    const auto rho = random_state(n, rng);
    const auto x = random_hermitian(n, rng);
    const auto y = random_hermitian(n, rng);
    const double c = rng.uniform(-3.0, 3.0);
    const double ax = araki_norm(x, rho);
    EXPECT_NEAR(araki_norm(x * c, rho), std::abs(c) * ax, 1e-10 * ax);
    EXPECT_LE(araki_norm(x + y, rho), ax + araki_norm(y, rho) + 1e-10);
    EXPECT_LE(operator_norm(x), ax * (1 + 1e-12));
  }
}

TEST(BkmInner, WorkedExample) {
  const double expected = 2.0 * 0.6 / std::log(4.0);
  EXPECT_NEAR(bkm_inner(sx(), sx(), worked_rho()), expected, 1e-14);
  EXPECT_NEAR(oracle::bkm_quadrature(oracle::pauli_x(), oracle::pauli_x(),
                                     oracle::diag({0.8, 0.2})),
              expected, 1e-12);
  EXPECT_NEAR(expected, 0.86562, 5e-6);
  EXPECT_NEAR(bkm_norm(sx(), worked_rho()), std::sqrt(expected), 1e-14);
  EXPECT_NEAR(bkm_norm(sx(), worked_rho()), 0.93039, 5e-6);
}

TEST(BkmInner, FlatAndDiagonalCases) {
  InstanceRng rng(37, 0);
  const Index n = 5;
  const auto flat = DensityState::maximally_mixed(n);
  const auto x = random_hermitian(n, rng);
  const auto y = random_hermitian(n, rng);
  EXPECT_NEAR(bkm_inner(x, y, flat), trace_product(x, y) / n, 1e-13);
  EXPECT_NEAR(bkm_norm(x, flat), x.frobenius_norm() / std::sqrt(double(n)), 1e-13);
  EXPECT_EQ(bkm_norm(HermitianOperator::zero(n), flat), 0.0);

  const RealVector l = (RealVector(3) << 0.2, 0.3, 0.5).finished();
  const auto u = eig(random_hermitian(3, rng)).eigenvectors;
  const auto rho = FiniteWeight::from_spectrum(l, u);
  const RealVector d = (RealVector(3) << 1.0, -2.0, 0.5).finished();
  const HermitianOperator xd(u * d.cast<Complex>().asDiagonal() * u.adjoint());
  EXPECT_NEAR(bkm_inner(xd, xd, rho), (l.array() * d.array().square()).sum(), 1e-13);
}

TEST(BkmInner, MatchesQuadrature) {
  InstanceRng rng(38, 0);
  for (int trial = 0; trial < 20; ++trial) {
    const Index n = rng.uniform_int(2, 8);
    const auto rho = random_state(n, rng);
    const auto x = random_hermitian(n, rng);
    const auto y = random_hermitian(n, rng);
    const double g = bkm_inner(x, y, rho);
    const double q = oracle::bkm_quadrature(x.matrix(), y.matrix(), rho.matrix());
    EXPECT_NEAR(g, q, 1e-8 * std::max(std::abs(q), bkm_norm(x, rho) * bkm_norm(y, rho)));
  }
}

TEST(BkmNorm, DominatedByArakiAndStrictOnGenericInstances) {
  InstanceRng rng(39, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const Index n = rng.uniform_int(2, 8);
    const auto rho = random_state(n, rng);
    const auto x = random_hermitian(n, rng);
    const double m = bkm_norm(x, rho);
    const double a = araki_norm(x, rho);
    EXPECT_LT(m, a);
  }
}

TEST(BkmNorm, RatioToArakiGrowsWithSkew) {
  double previous = 0.0;
  for (double r : {0.5, 0.9, 0.99, 0.999}) {
    const FiniteWeight rho(HermitianOperator(oracle::diag({r, 1 - r})));
    const double ratio = araki_norm(sx(), rho) / bkm_norm(sx(), rho);
    EXPECT_GT(ratio, previous);
    previous = ratio;
  }
  EXPECT_GT(previous, 10.0);
}

TEST(NormReport, WorkedInstanceAndZero) {
  const NormReport r = norm_report(sx(), worked_rho());
  EXPECT_NEAR(r.araki_norm, 2.0, 1e-12);
  EXPECT_NEAR(r.bkm_norm, 0.930385, 1e-6);
  EXPECT_DOUBLE_EQ(r.operator_norm, 1.0);
  EXPECT_DOUBLE_EQ(r.trace_norm, 2.0);
  const NormReport z = norm_report(HermitianOperator::zero(2), worked_rho());
  for (const auto& [k, v] : z.to_map()) {
    if (k == "epsilon" || k == "schatten_p") continue;
    EXPECT_EQ(v, 0.0) << k;
  }
  // BKM is taken against the normalized base.
  const NormReport scaled = norm_report(sx(), worked_rho().scaled(3.0));
  EXPECT_NEAR(scaled.bkm_norm, r.bkm_norm, 1e-14);
}
