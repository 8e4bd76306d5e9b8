#pragma once

// Dense Hermitian operators, their spectral decomposition, matrix functions
// and the Loewner order.

#include <Eigen/Dense>

#include <complex>
#include <string>
#include <utility>

#include "qig/errors.hpp"

namespace qig {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Residual tolerance used by the spectral invariants (per unit dimension).
inline constexpr double kEigTolerance = 1e-12;
/// Default relative Loewner tolerance.
inline constexpr double kLoewnerTolerance = 1e-10;

/// Dense n x n complex self-adjoint matrix.
///
/// Construction symmetrizes the input as (A + A^dagger) / 2, so the stored
/// entries satisfy entries(i, j) == conj(entries(j, i)) bit for bit. The
/// Frobenius norm of the removed anti-Hermitian part is kept as
/// symmetrization_residual().
class HermitianOperator {
 public:
  explicit HermitianOperator(const Matrix& m);

  static HermitianOperator zero(Index n);
  static HermitianOperator identity(Index n);
  static HermitianOperator diagonal(const RealVector& d);

  Index dim() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  Complex operator()(Index i, Index j) const { return m_(i, j); }

  double symmetrization_residual() const { return residual_; }
  double trace() const { return m_.diagonal().real().sum(); }
  double frobenius_norm() const { return m_.norm(); }

  HermitianOperator& operator+=(const HermitianOperator& o);
  HermitianOperator& operator-=(const HermitianOperator& o);
  HermitianOperator& operator*=(double c);

 private:
  Matrix m_;
  double residual_ = 0.0;
};

HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b);
HermitianOperator operator-(HermitianOperator a, const HermitianOperator& b);
HermitianOperator operator-(HermitianOperator a);
HermitianOperator operator*(double c, HermitianOperator a);
HermitianOperator operator*(HermitianOperator a, double c);

/// Re Tr(A B) for Hermitian A, B.
double trace_product(const HermitianOperator& a, const HermitianOperator& b);

void require_same_dim(const HermitianOperator& a, const HermitianOperator& b,
                      const char* where);

/// Eigenvalues in ascending order with orthonormal eigenvector columns.
struct SpectralDecomposition {
  RealVector eigenvalues;
  Matrix eigenvectors;

  Index dim() const { return eigenvalues.size(); }
  double min() const { return eigenvalues(0); }
  double max() const { return eigenvalues(eigenvalues.size() - 1); }

  /// V diag(f(lambda)) V^dagger for a real scalar function f.
  template <class F>
  HermitianOperator apply(F&& f) const {
    RealVector fl(eigenvalues.size());
    for (Index i = 0; i < eigenvalues.size(); ++i) fl(i) = f(eigenvalues(i));
    return HermitianOperator(eigenvectors * fl.asDiagonal() * eigenvectors.adjoint());
  }

  /// Coordinates V^dagger A V of a matrix in this eigenbasis.
  Matrix to_eigenbasis(const Matrix& a) const { return eigenvectors.adjoint() * a * eigenvectors; }
  Matrix from_eigenbasis(const Matrix& a) const { return eigenvectors * a * eigenvectors.adjoint(); }

  double reconstruction_residual(const HermitianOperator& a) const;
  double orthonormality_residual() const;
};

/// Full eigendecomposition. Eigenvectors inside a numerically degenerate
/// cluster are replaced by the Gram-Schmidt orthonormalization of the cluster
/// projector applied to e_0, e_1, ... in order, and every eigenvector is given
/// the phase that makes its largest-modulus component real and positive. The
/// result depends only on the eigenprojectors, so it is reproducible.
SpectralDecomposition eig(const HermitianOperator& a);

/// Eigenvalues only, ascending.
RealVector eigenvalues(const HermitianOperator& a);

enum class Domain { Real, NonNegative, Positive };

const char* domain_name(Domain d);

/// Throws DomainError naming the offending eigenvalue.
void check_domain(const SpectralDecomposition& d, Domain domain, const char* fname);

template <class F>
HermitianOperator matfun(const SpectralDecomposition& d, F&& f, Domain domain = Domain::Real,
                         const char* fname = "f") {
  check_domain(d, domain, fname);
  return d.apply(std::forward<F>(f));
}

template <class F>
HermitianOperator matfun(const HermitianOperator& a, F&& f, Domain domain = Domain::Real,
                         const char* fname = "f") {
  return matfun(eig(a), std::forward<F>(f), domain, fname);
}

HermitianOperator matrix_log(const HermitianOperator& a);
HermitianOperator matrix_exp(const HermitianOperator& a);
HermitianOperator matrix_sqrt(const HermitianOperator& a);
/// A^t for A > 0 (any real t) or A >= 0 (t > 0).
HermitianOperator matrix_power(const HermitianOperator& a, double t);

/// Largest modulus eigenvalue, i.e. the operator norm of a Hermitian matrix.
double operator_norm(const HermitianOperator& a);
/// Largest singular value of a general square matrix.
double spectral_norm(const Matrix& m);

/// lambda_min(B - A) / max(||A||, ||B||, 1).
double loewner_margin(const HermitianOperator& a, const HermitianOperator& b);

/// A <= B in the Loewner order: lambda_min(B - A) >= -tol * max(||A||, ||B||, 1).
bool loewner_leq(const HermitianOperator& a, const HermitianOperator& b,
                 double tol = kLoewnerTolerance);

}  // namespace qig
