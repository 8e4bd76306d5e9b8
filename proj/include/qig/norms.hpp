#pragma once

// Schatten, trace, epsilon, Araki and BKM norms of perturbations.

#include <cstddef>
#include <map>
#include <string>

#include "qig/spectral.hpp"
#include "qig/weight.hpp"

namespace qig {

/// (sum_i |lambda_i|^p)^{1/p}; a quasinorm for 0 < p < 1.
double schatten_p_norm(const HermitianOperator& a, double p);

double trace_norm(const HermitianOperator& a);

/// Epsilon in [0, 1/2] together with the base weight supplying
/// H0 = -log rho0 + log(lambda_max(rho0)) I, shifted so that min(H0) = 0.
class EpsilonNormParams {
 public:
  EpsilonNormParams(double epsilon, FiniteWeight base);

  double epsilon() const { return epsilon_; }
  const FiniteWeight& base() const { return base_; }
  /// Eigenvalues of the shifted H0, paired with the base eigenbasis.
  RealVector h0_eigenvalues() const;

 private:
  double epsilon_;
  FiniteWeight base_;
};

/// || (H0 + I)^{-1+eps} X (H0 + I)^{-eps} ||.
double epsilon_norm(const HermitianOperator& x, const EpsilonNormParams& params);

/// sup_{|t| < 1/2} || rho^t X rho^{-t} ||, evaluated at t = +-1/2.
///
/// rho^{iu} is unitary and commutes with rho^s, so only Re t matters, and
/// t -> ||rho^t X rho^{-t}|| is convex on [-1/2, 1/2]; the supremum over the
/// open interval is the endpoint value.
double araki_norm(const HermitianOperator& x, const FiniteWeight& rho);

/// Grid maximum of || rho^t X rho^{-t} || over grid_points evenly spaced t in
/// [-1/2, 1/2]. Independent check of araki_norm.
double araki_norm_scan(const HermitianOperator& x, const FiniteWeight& rho,
                       std::size_t grid_points);

/// int_0^1 Tr(rho^t X rho^{1-t} Y) dt in closed form: sum_ij conj(X~_ij) Y~_ij L(l_i, l_j)
/// in the eigenbasis of rho, L the logarithmic mean.
double bkm_inner(const HermitianOperator& x, const HermitianOperator& y, const FiniteWeight& rho);

double bkm_norm(const HermitianOperator& x, const FiniteWeight& rho);

struct NormReport {
  double operator_norm = 0.0;
  double trace_norm = 0.0;
  double schatten_p = 1.0;
  double schatten_p_norm = 0.0;
  double epsilon = 0.5;
  double epsilon_norm = 0.0;
  double araki_norm = 0.0;
  double bkm_norm = 0.0;

  /// Flat key -> value map, keys in a fixed order.
  std::map<std::string, double> to_map() const;
};

/// All norms of X relative to `base`. The BKM norm is taken relative to the
/// unit-trace normalization of the base.
NormReport norm_report(const HermitianOperator& x, const FiniteWeight& base, double epsilon = 0.5,
                       double schatten_p = 1.0);

}  // namespace qig
