#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's spectral routines: powers, logs and exponentials go through
// Eigen's own solvers and unsupported MatrixFunctions, integrals through
// Boost quadrature.

#include <cmath>
#include <complex>
#include <cstdio>
#include <sys/wait.h>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <unsupported/Eigen/MatrixFunctions>

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline Matrix diag(std::initializer_list<double> d) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (double x : d) v(i++) = x;
  return v.asDiagonal();
}

inline Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

/// a^t for a positive definite Hermitian a.
inline Matrix power(const Matrix& a, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  const Eigen::VectorXd w = es.eigenvalues().array().pow(t).matrix();
  return es.eigenvectors() * w.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

inline Matrix expm(const Matrix& a) { return a.exp(); }
inline Matrix logm(const Matrix& a) { return a.log(); }

inline double spectral_norm(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

inline double trace_norm(const Matrix& m) {
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

/// Grid maximum of ||rho^t X rho^{-t}|| on [-1/2, 1/2] with dense powers.
inline double araki_scan(const Matrix& x, const Matrix& rho, int points) {
  double best = 0.0;
  for (int k = 0; k < points; ++k) {
    const double t = -0.5 + static_cast<double>(k) / (points - 1);
    best = std::max(best, spectral_norm(power(rho, t) * x * power(rho, -t)));
  }
  return best;
}

/// int_0^1 Tr(rho^t X rho^{1-t} Y) dt by adaptive Gauss-Kronrod.
inline double bkm_quadrature(const Matrix& x, const Matrix& y, const Matrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  const Matrix v = es.eigenvectors();
  const Matrix xe = v.adjoint() * x * v;
  const Matrix ye = v.adjoint() * y * v;
  const Eigen::VectorXd l = es.eigenvalues();
  auto f = [&](double t) {
    const Eigen::VectorXcd a = l.array().pow(t).cast<Complex>().matrix();
    const Eigen::VectorXcd b = l.array().pow(1.0 - t).cast<Complex>().matrix();
    return (a.asDiagonal() * xe * b.asDiagonal() * ye).trace().real();
  };
  double err = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, 1.0, 15, 1e-13,
                                                                       &err);
}

/// Divided difference of exp over distinct nodes by the textbook recursion.
inline double exp_divided_difference(const std::vector<double>& x) {
  std::vector<double> table(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) table[i] = std::exp(x[i]);
  const int m = static_cast<int>(x.size());
  for (int level = 1; level < m; ++level) {
    for (int i = m - 1; i >= level; --i) {
      table[i] = (table[i] - table[i - 1]) / (x[i] - x[i - level]);
    }
  }
  return table.back();
}

/// Tr rho (log rho - log sigma) with dense logarithms.
inline double relative_entropy(const Matrix& rho, const Matrix& sigma) {
  return (rho * (logm(rho) - logm(sigma))).trace().real();
}

/// Runs a shell command and captures stdout; returns the exit status.
inline int run(const std::string& cmd, std::string* out) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return -1;
  char buf[4096];
  std::string acc;
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) acc.append(buf, got);
  const int status = pclose(pipe);
  if (out) *out = std::move(acc);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace oracle
