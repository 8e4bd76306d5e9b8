#include "qig/weight.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

namespace qig {

namespace {

void require_positive(const SpectralDecomposition& spec, const char* where) {
  const Index n = spec.dim();
  const double lmin = spec.min();
  const double lmax = spec.max();
  const double gate = static_cast<double>(n) * kPositivityGate * std::abs(lmax);
  if (!(lmin > gate) || !std::isfinite(lmax)) {
    std::ostringstream os;
    os.precision(6);
    os << where << ": operator is not strictly positive (min eigenvalue " << lmin
       << ", required > " << gate << " = n * " << kPositivityGate << " * ||rho||)";
    throw DomainError(os.str());
  }
}

// rho^{-a} sigma rho^{-a}, largest eigenvalue.
double sandwiched_max(const FiniteWeight& outer, double a, const HermitianOperator& inner) {
  const auto& s = outer.spectrum();
  RealVector w = s.eigenvalues.array().pow(-a).matrix();
  Matrix inner_e = s.to_eigenbasis(inner.matrix());
  Matrix m = w.asDiagonal() * inner_e * w.asDiagonal();
  return eigenvalues(HermitianOperator(m)).maxCoeff();
}

}  // namespace

FiniteWeight::FiniteWeight(const HermitianOperator& op) : op_(op), spec_(eig(op)) {
  require_positive(spec_, "FiniteWeight");
}

FiniteWeight::FiniteWeight(HermitianOperator op, SpectralDecomposition spec)
    : op_(std::move(op)), spec_(std::move(spec)) {}

FiniteWeight FiniteWeight::from_spectrum(const RealVector& eigenvalues, const Matrix& eigenvectors) {
  const Index n = eigenvalues.size();
  if (n < 1 || eigenvectors.rows() != n || eigenvectors.cols() != n) {
    throw DimensionMismatch("FiniteWeight::from_spectrum: eigenvector matrix must be n x n");
  }
  for (Index i = 0; i < n; ++i) {
    if (!(eigenvalues(i) > 0.0) || !std::isfinite(eigenvalues(i))) {
      std::ostringstream os;
      os.precision(17);
      os << "FiniteWeight::from_spectrum: eigenvalue " << eigenvalues(i) << " (index " << i
         << ") is not strictly positive";
      throw DomainError(os.str());
    }
  }
  const double ortho = (eigenvectors.adjoint() * eigenvectors - Matrix::Identity(n, n)).norm();
  if (ortho > 1e-10 * static_cast<double>(n)) {
    throw InvalidArgument("FiniteWeight::from_spectrum: eigenvectors are not orthonormal");
  }
  std::vector<Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return eigenvalues(a) < eigenvalues(b); });
  SpectralDecomposition spec{RealVector(n), Matrix(n, n)};
  for (Index k = 0; k < n; ++k) {
    spec.eigenvalues(k) = eigenvalues(order[static_cast<std::size_t>(k)]);
    spec.eigenvectors.col(k) = eigenvectors.col(order[static_cast<std::size_t>(k)]);
  }
  HermitianOperator op(spec.eigenvectors * spec.eigenvalues.cast<Complex>().asDiagonal() *
                       spec.eigenvectors.adjoint());
  return FiniteWeight(std::move(op), std::move(spec));
}

HermitianOperator FiniteWeight::power(double t) const {
  return spec_.apply([t](double x) { return std::pow(x, t); });
}

HermitianOperator FiniteWeight::log() const {
  return spec_.apply([](double x) { return std::log(x); });
}

FiniteWeight FiniteWeight::scaled(double c) const {
  if (!(c > 0.0)) throw DomainError("FiniteWeight::scaled: factor must be positive");
  SpectralDecomposition s{spec_.eigenvalues * c, spec_.eigenvectors};
  return FiniteWeight(op_ * c, std::move(s));
}

DensityState::DensityState(const FiniteWeight& w, double tol_trace) : FiniteWeight(w) {
  if (std::abs(trace() - 1.0) > tol_trace) {
    std::ostringstream os;
    os.precision(17);
    os << "DensityState: trace " << trace() << " differs from 1 by more than " << tol_trace;
    throw DomainError(os.str());
  }
}

DensityState::DensityState(const HermitianOperator& op, double tol_trace)
    : DensityState(FiniteWeight(op), tol_trace) {}

DensityState DensityState::normalized(const FiniteWeight& w) {
  return DensityState(w.scaled(1.0 / w.trace()));
}

DensityState DensityState::from_spectrum(const RealVector& eigenvalues, const Matrix& eigenvectors) {
  return DensityState(FiniteWeight::from_spectrum(eigenvalues / eigenvalues.sum(), eigenvectors));
}

DensityState DensityState::maximally_mixed(Index n) {
  return from_spectrum(RealVector::Constant(n, 1.0 / static_cast<double>(n)),
                       Matrix::Identity(n, n));
}

NearbyCertificate::NearbyCertificate(double c, double p) : c_(c), p_(p) {
  if (!(c > 1.0) || !std::isfinite(c)) {
    std::ostringstream os;
    os.precision(17);
    os << "NearbyCertificate: C must satisfy C > 1, got " << c;
    throw InvalidArgument(os.str());
  }
  if (!(p >= 0.0 && p < 1.0)) {
    std::ostringstream os;
    os << "NearbyCertificate: p must lie in [0, 1), got " << p;
    throw InvalidArgument(os.str());
  }
}

double nearby_constant(const FiniteWeight& rho, const FiniteWeight& sigma) {
  return p_nearby_constant(rho, sigma, 0.0);
}

double p_nearby_constant(const FiniteWeight& rho, const FiniteWeight& sigma, double p) {
  require_same_dim(rho.op(), sigma.op(), "p_nearby_constant");
  if (!(p >= 0.0 && p < 1.0)) throw InvalidArgument("p_nearby_constant: p must lie in [0, 1)");
  // sigma <= C rho^{1-p}  <=>  rho^{-(1-p)/2} sigma rho^{-(1-p)/2} <= C
  const double upper = sandwiched_max(rho, 0.5 * (1.0 - p), sigma.op());
  // rho^{1+p} <= C sigma  <=>  sigma^{-1/2} rho^{1+p} sigma^{-1/2} <= C
  const double lower = sandwiched_max(sigma, 0.5, rho.power(1.0 + p));
  const double c = std::max(upper, lower);
  return p == 0.0 ? std::max(c, 1.0) : c;
}

NearbyCertificate minimal_certificate(const FiniteWeight& rho, const FiniteWeight& sigma, double p,
                                      double slack) {
  const double c = std::max(p_nearby_constant(rho, sigma, p), 1.0);
  return NearbyCertificate(c * (1.0 + slack), p);
}

double p_nearby_margin(const FiniteWeight& rho, const FiniteWeight& sigma,
                       const NearbyCertificate& cert) {
  require_same_dim(rho.op(), sigma.op(), "p_nearby_check");
  const HermitianOperator lower = rho.power(1.0 + cert.p()) * (1.0 / cert.c());
  const HermitianOperator upper = rho.power(1.0 - cert.p()) * cert.c();
  return std::min(loewner_margin(lower, sigma.op()), loewner_margin(sigma.op(), upper));
}

bool p_nearby_check(const FiniteWeight& rho, const FiniteWeight& sigma,
                    const NearbyCertificate& cert, double tol) {
  return p_nearby_margin(rho, sigma, cert) >= -tol;
}

}  // namespace qig
