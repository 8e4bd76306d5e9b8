#include <gtest/gtest.h>

#include <cmath>

#include "qig/kernels.hpp"
#include "qig/random.hpp"

using namespace qig;

namespace {

// (a - b) / (log a - log b) in extended precision, and a Taylor expansion
// of sqrt(ab) sinh(x)/x in x = log(a/b)/2 for nearly equal arguments.
long double log_mean_reference(long double a, long double b) {
  const long double x = 0.5L * std::log(a / b);
  if (std::fabs(x) > 1e-3L) return (a - b) / (std::log(a) - std::log(b));
  const long double x2 = x * x;
  return std::sqrt(a * b) * (1 + x2 / 6 + x2 * x2 / 120 + x2 * x2 * x2 / 5040);
}

}  // namespace

TEST(LogMean, BasicIdentities) {
  EXPECT_DOUBLE_EQ(log_mean(0.3, 0.3), 0.3);
  EXPECT_NEAR(log_mean(0.8, 0.2), 0.6 / std::log(4.0), 1e-16);
  EXPECT_DOUBLE_EQ(log_mean(0.8, 0.2), log_mean(0.2, 0.8));
  // Homogeneous of degree one.
  EXPECT_NEAR(log_mean(8.0, 2.0), 10.0 * log_mean(0.8, 0.2), 1e-14);
}

TEST(LogMean, AccurateAcrossTheSeriesSwitch) {
  for (double rel : {1e-12, 1e-9, 1e-6, 5e-5, 1e-4, 2e-4, 1e-3, 1e-1, 1.0, 30.0}) {
    const double a = 0.37;
    const double b = a * std::exp(rel);
    const long double ref = log_mean_reference(a, b);
    EXPECT_NEAR(log_mean(a, b), static_cast<double>(ref), 4e-16 * static_cast<double>(ref))
        << "log ratio " << rel;
  }
}

TEST(LogMean, BetweenGeometricAndArithmeticMeans) {
  InstanceRng rng(41, 0);
  for (int i = 0; i < 1000; ++i) {
    const double a = std::exp(rng.uniform(-20, 0));
    const double b = std::exp(rng.uniform(-20, 0));
    const double l = log_mean(a, b);
    EXPECT_GE(l, std::sqrt(a * b) * (1 - 1e-15));
    EXPECT_LE(l, 0.5 * (a + b) * (1 + 1e-15));
  }
}

TEST(Linspace, EndpointsAndSpacing) {
  const auto t = linspace(-0.5, 0.5, 11);
  ASSERT_EQ(t.size(), 11u);
  EXPECT_EQ(t.front(), -0.5);
  EXPECT_EQ(t.back(), 0.5);
  EXPECT_EQ(t[5], 0.0);
  EXPECT_EQ(linspace(1.0, 2.0, 1).size(), 1u);
}

TEST(Kernels, SerialAndParallelAgreeBitwise) {
  InstanceRng rng(42, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const Index n = rng.uniform_int(2, 16);
    const auto rho0 = random_state(n, rng);
    const auto rho1 = random_state(n, rng);
    const Matrix xe = rho0.spectrum().to_eigenbasis(random_hermitian(n, rng).matrix());
    const auto ts = linspace(-0.5, 0.5, 257);
    const RealVector ll = rho0.log_eigenvalues();
    EXPECT_EQ(kernels::serial::conjugation_norm_max(xe, ll, ts),
              kernels::omp::conjugation_norm_max(xe, ll, ts));
    EXPECT_EQ(kernels::serial::cocycle_envelope(rho0.spectrum(), rho1.spectrum(), ts),
              kernels::omp::cocycle_envelope(rho0.spectrum(), rho1.spectrum(), ts));
    const Eigen::MatrixXd ks = kernels::serial::log_mean_kernel(rho0.spectrum().eigenvalues);
    const Eigen::MatrixXd ko = kernels::omp::log_mean_kernel(rho0.spectrum().eigenvalues);
    EXPECT_TRUE((ks.array() == ko.array()).all());
  }
}

TEST(Kernels, MapIndexedOrderAndExceptions) {
  auto square = [](std::size_t i) { return static_cast<int>(i * i); };
  const auto s = kernels::serial::map_indexed<int>(100, square);
  const auto o = kernels::omp::map_indexed<int>(100, square);
  EXPECT_EQ(s, o);
  EXPECT_EQ(o[9], 81);
  auto failing = [](std::size_t i) -> int {
    if (i == 7 || i == 40) throw std::runtime_error("boom " + std::to_string(i));
    return 0;
  };
  try {
    kernels::omp::map_indexed<int>(64, failing);
    FAIL() << "expected rethrow";
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "boom 7");
  }
}
