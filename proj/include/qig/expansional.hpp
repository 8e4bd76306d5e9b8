#pragma once

// The perturbation map X -> rho_X = exp(log rho0 - X), its normalization,
// and the expansional (Dyson / Matsubara) series with remainder bounds.

#include <cstddef>
#include <span>
#include <vector>

#include "qig/spectral.hpp"
#include "qig/weight.hpp"

namespace qig {

/// A Hermitian X anchored at a base weight rho0 = exp(-H0).
class Perturbation {
 public:
  Perturbation(FiniteWeight base, HermitianOperator x);

  const FiniteWeight& base() const { return base_; }
  const HermitianOperator& x() const { return x_; }

  /// Tr(rho0_hat X) with rho0_hat = rho0 / Tr rho0.
  double expectation() const;
  bool centered(double tol = kTraceTolerance) const;

 private:
  FiniteWeight base_;
  HermitianOperator x_;
};

struct FreeEnergy {
  double psi = 0.0;  ///< log Tr exp(log rho0 - X)
  double z = 1.0;    ///< exp(psi)
};

struct PerturbedState {
  DensityState state;
  FreeEnergy free_energy;
};

/// exp(log rho0 - X), unnormalized.
FiniteWeight perturbed_weight(const Perturbation& pert);
FiniteWeight perturbed_weight(const FiniteWeight& rho, const HermitianOperator& x);

/// exp(log rho0 - X - psi I) with psi = log Tr exp(log rho0 - X), computed
/// with a log-sum-exp shift so it cannot overflow for finite inputs.
PerturbedState perturbed_state(const Perturbation& pert);
PerturbedState perturbed_state(const FiniteWeight& rho, const HermitianOperator& x);

/// X - Tr(rho0_hat X) I.
Perturbation center(const Perturbation& pert);

/// X = log rho - log sigma, so that sigma = exp(log rho - X).
HermitianOperator relative_hamiltonian(const FiniteWeight& rho, const FiniteWeight& sigma);

/// Largest truncation order accepted by the series routines.
inline constexpr int kMaxSeriesOrder = 30;

/// Taylor coefficients T_0..T_N of s -> exp(A + sB):
///   T_n = int_{simplex} e^{a_1 A} B e^{a_2 A} B ... B e^{a_{n+1} A} da.
/// When A is diagonal, T_n(i, j) = sum over index paths i = k_0, ..., k_n = j
/// of B_{k0 k1} ... B_{k(n-1) kn} times the divided difference of exp on
/// (A_{k0}, ..., A_{kn}). All orders are produced at once by exponentiating
/// the block bidiagonal (Opitz) matrix with scaling and squaring, which is
/// free of the node-gap divisions of the recursive divided-difference scheme.
std::vector<Matrix> expansional_coefficients(const Matrix& a, const Matrix& b, int order);

/// Divided difference exp[x_0, ..., x_n] (repeated nodes allowed).
double exp_divided_difference(std::span<const double> nodes);

struct ExpansionResult {
  int order = 0;
  HermitianOperator partial_sum;
  /// Operator-norm bound on the tail: scale * sum_{n > N} M^n / n!.
  double remainder_bound = 0.0;
  /// Araki norm of X relative to the base.
  double araki_m = 0.0;
  /// ||rho|| for the unsandwiched series, 1 for the sandwiched one.
  double remainder_scale = 1.0;
  /// Operator norms of the individual terms n = 0..N.
  std::vector<double> term_norms;
  /// partial_sums[k] is the partial sum through order k; back() == partial_sum.
  std::vector<HermitianOperator> partial_sums;

  /// Remainder bound of the order-k truncation, k <= order.
  double remainder_bound_at(int k) const;
};

/// sum_{n > N} M^n / n!, summed directly (no cancellation against e^M).
double exponential_tail(double m, int order);

/// Partial sum of rho_X = rho + sum_{n=1..N} (-1)^n int_{simplex}
/// rho^{a_1} X rho^{a_2} X ... X rho^{a_{n+1}}, with remainder
/// ||rho|| sum_{n > N} M^n / n!, M = araki_norm(X, rho).
ExpansionResult dyson_series(const FiniteWeight& rho, const HermitianOperator& x, int order);

/// Partial sum of rho^{1/2} rho_X^{-1} rho^{1/2} = I + sum_n int_{simplex}
/// (conjugated X factors); each term has norm <= M^n / n!.
ExpansionResult inverse_sandwich_series(const FiniteWeight& rho, const HermitianOperator& x,
                                        int order);

struct SandwichBounds {
  double araki_m = 0.0;
  double lower = 1.0;  ///< e^{-M}
  double upper = 1.0;  ///< e^{M}
  double lower_margin = 0.0;  ///< loewner_margin(e^{-M} rho, rho_X)
  double upper_margin = 0.0;  ///< loewner_margin(rho_X, e^{M} rho)
  bool holds = false;
};

/// Verifies e^{-M} rho <= rho_X <= e^{M} rho with M = araki_norm(X, rho).
SandwichBounds sandwich_bounds(const FiniteWeight& rho, const HermitianOperator& x,
                               double tol = kLoewnerTolerance);

struct FormBoundResult {
  double margin_minus = 0.0;  ///< margin of (log C) I + p H0 - X >= 0
  double margin_plus = 0.0;   ///< margin of (log C) I + p H0 + X >= 0
  bool holds = false;
};

/// Checks (log C) I + p H0 -+ X >= 0 with H0 = -log rho and X the relative
/// Hamiltonian of (rho, sigma). Throws PreconditionError unless the
/// certificate witnesses that sigma is p-nearby rho.
FormBoundResult form_bound_check(const FiniteWeight& rho, const FiniteWeight& sigma,
                                 const NearbyCertificate& cert, double tol = kLoewnerTolerance);

}  // namespace qig
