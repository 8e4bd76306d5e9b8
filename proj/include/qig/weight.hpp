#pragma once

// Faithful finite weights, density states and the (p-)nearby relation.

#include "qig/spectral.hpp"

namespace qig {

/// A weight is rejected unless lambda_min > n * kPositivityGate * lambda_max.
inline constexpr double kPositivityGate = 1e-14;
/// |Tr rho - 1| allowed for a DensityState.
inline constexpr double kTraceTolerance = 1e-10;

/// Strictly positive Hermitian operator with its spectral decomposition
/// cached. All matrix functions of the weight reuse the cached spectrum.
class FiniteWeight {
 public:
  /// Diagonalizes `op` and applies the strict positivity gate.
  explicit FiniteWeight(const HermitianOperator& op);

  /// Builds V diag(eigenvalues) V^dagger from exact spectral data. Only
  /// eigenvalues > 0 are required; there is no relative gate because the
  /// spectrum is given, not computed.
  static FiniteWeight from_spectrum(const RealVector& eigenvalues, const Matrix& eigenvectors);

  const HermitianOperator& op() const { return op_; }
  const SpectralDecomposition& spectrum() const { return spec_; }
  const Matrix& matrix() const { return op_.matrix(); }
  Index dim() const { return op_.dim(); }

  double trace() const { return spec_.eigenvalues.sum(); }
  double min_eigenvalue() const { return spec_.min(); }
  double max_eigenvalue() const { return spec_.max(); }

  HermitianOperator power(double t) const;
  HermitianOperator log() const;
  RealVector log_eigenvalues() const { return spec_.eigenvalues.array().log().matrix(); }

  FiniteWeight scaled(double c) const;

 protected:
  FiniteWeight(HermitianOperator op, SpectralDecomposition spec);

 private:
  HermitianOperator op_;
  SpectralDecomposition spec_;
};

/// A FiniteWeight with unit trace.
class DensityState : public FiniteWeight {
 public:
  explicit DensityState(const FiniteWeight& w, double tol_trace = kTraceTolerance);
  explicit DensityState(const HermitianOperator& op, double tol_trace = kTraceTolerance);

  /// w / Tr w.
  static DensityState normalized(const FiniteWeight& w);
  static DensityState from_spectrum(const RealVector& eigenvalues, const Matrix& eigenvectors);
  static DensityState maximally_mixed(Index n);
};

/// Witness (C, p) for C^{-1} rho^{1+p} <= sigma <= C rho^{1-p}; requires
/// C > 1 and 0 <= p < 1.
class NearbyCertificate {
 public:
  NearbyCertificate(double c, double p);

  double c() const { return c_; }
  double p() const { return p_; }

 private:
  double c_;
  double p_;
};

/// Minimal C with C^{-1} rho <= sigma <= C rho:
/// max(lambda_max(rho^{-1/2} sigma rho^{-1/2}), lambda_max(sigma^{-1/2} rho sigma^{-1/2})).
double nearby_constant(const FiniteWeight& rho, const FiniteWeight& sigma);

/// Minimal C with C^{-1} rho^{1+p} <= sigma <= C rho^{1-p}; reduces to
/// nearby_constant at p = 0. The result may be < 1 for p > 0.
double p_nearby_constant(const FiniteWeight& rho, const FiniteWeight& sigma, double p);

/// Smallest certificate strictly above the minimal constant: C* (1 + slack),
/// and never below 1 + slack.
NearbyCertificate minimal_certificate(const FiniteWeight& rho, const FiniteWeight& sigma,
                                      double p, double slack = 1e-9);

/// Worst relative Loewner margin of the two inequalities of the p-nearby relation.
double p_nearby_margin(const FiniteWeight& rho, const FiniteWeight& sigma,
                       const NearbyCertificate& cert);

bool p_nearby_check(const FiniteWeight& rho, const FiniteWeight& sigma,
                    const NearbyCertificate& cert, double tol = kLoewnerTolerance);

}  // namespace qig
