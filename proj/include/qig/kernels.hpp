#pragma once

// Data-parallel inner loops. Every kernel exists twice with identical
// signatures: qig::kernels::serial is the reference implementation kept for
// testing, qig::kernels::omp is the OpenMP version used by the library.
// Both produce bit-identical results: the parallel reductions are max
// reductions or per-index writes, neither of which depends on scheduling.

#include <cstddef>
#include <exception>
#include <span>
#include <vector>

#include "qig/spectral.hpp"

namespace qig {

/// Logarithmic mean (a - b) / (log a - log b), L(a, a) = a. Evaluated as
/// sqrt(ab) sinh(d/2) / (d/2), d = log(a/b), with a Taylor series for small d.
double log_mean(double a, double b);

/// n evenly spaced points on [lo, hi], endpoints included.
std::vector<double> linspace(double lo, double hi, std::size_t points);

namespace kernels {

namespace serial {

/// max over t of || diag(e^{t l}) X diag(e^{-t l}) ||, X given in the
/// eigenbasis of rho and l = log eigenvalues of rho.
double conjugation_norm_max(const Matrix& x_eig, const RealVector& log_lambda,
                            std::span<const double> ts);

/// max over t of ||rho1^t rho0^{-t}|| * ||rho0^t rho1^{-t}||.
double cocycle_envelope(const SpectralDecomposition& rho0, const SpectralDecomposition& rho1,
                        std::span<const double> ts);

/// K_ij = L(lambda_i, lambda_j).
Eigen::MatrixXd log_mean_kernel(const RealVector& lambda);

template <class Result, class Fn>
std::vector<Result> map_indexed(std::size_t count, Fn&& fn) {
  std::vector<Result> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(fn(i));
  return out;
}

}  // namespace serial

namespace omp {

double conjugation_norm_max(const Matrix& x_eig, const RealVector& log_lambda,
                            std::span<const double> ts);

double cocycle_envelope(const SpectralDecomposition& rho0, const SpectralDecomposition& rho1,
                        std::span<const double> ts);

Eigen::MatrixXd log_mean_kernel(const RealVector& lambda);

/// Evaluates fn(0..count-1) with a dynamic OpenMP schedule. Results land at
/// their own index; the first exception by index is rethrown after the loop.
template <class Result, class Fn>
std::vector<Result> map_indexed(std::size_t count, Fn&& fn) {
  std::vector<Result> out(count);
  std::vector<std::exception_ptr> errors(count);
  const long long n = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic)
  for (long long i = 0; i < n; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace omp

}  // namespace kernels
}  // namespace qig
