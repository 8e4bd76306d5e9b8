#include "qig/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace qig {

double log_mean(double a, double b) {
  if (a == b) return a;
  const double d = std::log(a) - std::log(b);
  const double x = 0.5 * d;
  const double g = std::sqrt(a) * std::sqrt(b);
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return g * (1.0 + x2 / 6.0 + x2 * x2 / 120.0);
  }
  return g * (std::sinh(x) / x);
}

std::vector<double> linspace(double lo, double hi, std::size_t points) {
  std::vector<double> ts(points);
  if (points == 1) {
    ts[0] = lo;
    return ts;
  }
  const double step = (hi - lo) / static_cast<double>(points - 1);
  for (std::size_t k = 0; k < points; ++k) ts[k] = lo + step * static_cast<double>(k);
  ts.back() = hi;
  return ts;
}

namespace kernels {

namespace {

double conjugated_norm(const Matrix& x_eig, const RealVector& log_lambda, double t) {
  const RealVector left = (t * log_lambda.array()).exp().matrix();
  const RealVector right = (-t * log_lambda.array()).exp().matrix();
  return spectral_norm(left.asDiagonal() * x_eig * right.asDiagonal());
}

// rho_a^t rho_b^{-t}
Matrix cocycle(const SpectralDecomposition& a, const SpectralDecomposition& b, double t) {
  const RealVector pa = a.eigenvalues.array().pow(t).matrix();
  const RealVector pb = b.eigenvalues.array().pow(-t).matrix();
  return (a.eigenvectors * pa.asDiagonal() * a.eigenvectors.adjoint()) *
         (b.eigenvectors * pb.asDiagonal() * b.eigenvectors.adjoint());
}

double cocycle_product(const SpectralDecomposition& rho0, const SpectralDecomposition& rho1,
                       double t) {
  return spectral_norm(cocycle(rho1, rho0, t)) * spectral_norm(cocycle(rho0, rho1, t));
}

}  // namespace

namespace serial {

double conjugation_norm_max(const Matrix& x_eig, const RealVector& log_lambda,
                            std::span<const double> ts) {
  double best = 0.0;
  for (double t : ts) best = std::max(best, conjugated_norm(x_eig, log_lambda, t));
  return best;
}

double cocycle_envelope(const SpectralDecomposition& rho0, const SpectralDecomposition& rho1,
                        std::span<const double> ts) {
  double best = 0.0;
  for (double t : ts) best = std::max(best, cocycle_product(rho0, rho1, t));
  return best;
}

Eigen::MatrixXd log_mean_kernel(const RealVector& lambda) {
  const Index n = lambda.size();
  Eigen::MatrixXd k(n, n);
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) k(i, j) = log_mean(lambda(i), lambda(j));
  return k;
}

}  // namespace serial

namespace omp {

double conjugation_norm_max(const Matrix& x_eig, const RealVector& log_lambda,
                            std::span<const double> ts) {
  double best = 0.0;
  const long long n = static_cast<long long>(ts.size());
#pragma omp parallel for reduction(max : best) schedule(static)
  for (long long k = 0; k < n; ++k) {
    best = std::max(best, conjugated_norm(x_eig, log_lambda, ts[static_cast<std::size_t>(k)]));
  }
  return best;
}

double cocycle_envelope(const SpectralDecomposition& rho0, const SpectralDecomposition& rho1,
                        std::span<const double> ts) {
  double best = 0.0;
  const long long n = static_cast<long long>(ts.size());
#pragma omp parallel for reduction(max : best) schedule(static)
  for (long long k = 0; k < n; ++k) {
    best = std::max(best, cocycle_product(rho0, rho1, ts[static_cast<std::size_t>(k)]));
  }
  return best;
}

Eigen::MatrixXd log_mean_kernel(const RealVector& lambda) {
  const Index n = lambda.size();
  Eigen::MatrixXd k(n, n);
#pragma omp parallel for schedule(static) if (n >= 64)
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) k(i, j) = log_mean(lambda(i), lambda(j));
  return k;
}

}  // namespace omp

}  // namespace kernels
}  // namespace qig
