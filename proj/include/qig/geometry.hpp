#pragma once

// Relative entropy, the BKM metric and its mixed representation, the two
// flat geodesic families, and the inequalities tying states to perturbations.

#include <cstddef>
#include <vector>

#include "qig/expansional.hpp"
#include "qig/norms.hpp"

namespace qig {

/// S(rho | sigma) = Tr rho (log rho - log sigma).
double relative_entropy(const DensityState& rho, const DensityState& sigma);

/// A (+1)-coordinate displacement X paired with a (-1)-coordinate
/// displacement delta rho.
struct TangentPair {
  HermitianOperator exp_component;
  HermitianOperator mix_component;
};

/// delta rho = int_0^1 rho^t X rho^{1-t} dt, so that Tr(Y delta rho) = g_BKM(Y, X).
HermitianOperator lower_index(const HermitianOperator& x, const FiniteWeight& rho);

TangentPair tangent_pair(const HermitianOperator& x, const DensityState& rho);

struct IdentityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// lhs = S(rho0 | sigma) + S(sigma | rho0), rhs = Tr((rho0 - sigma) X) with
/// sigma the normalized state of exp(log rho0 - X).
IdentityCheck symmetrized_entropy_identity(const DensityState& rho0, const HermitianOperator& x);

struct HessianCheck {
  double fd_value = 0.0;        ///< second central difference at step h
  double fd_half_step = 0.0;    ///< same at h / 2
  double richardson = 0.0;      ///< (4 fd(h/2) - fd(h)) / 3
  double error_estimate = 0.0;  ///< |fd(h) - fd(h/2)| * 4 / 3, estimated error of fd(h)
  double closed_form = 0.0;     ///< bkm_inner(X, X, rho0)
  double tolerance = 0.0;       ///< allowed |fd(h) - closed_form|
  bool holds = false;
};

/// Smallest finite-difference step accepted by bkm_hessian_check.
inline constexpr double kMinHessianStep = 1e-4;

/// d^2/ds^2 S(rho0 | rho_{sX}) at s = 0 by central differences, against the
/// BKM closed form. The full second derivative (no factor 1/2) equals
/// g_BKM(X, X) for centered X. holds when |fd(h) - g| is within twice the
/// Richardson error estimate and within rel_tol of g.
HessianCheck bkm_hessian_check(const DensityState& rho0, const HermitianOperator& x,
                               double h = 1e-3, double rel_tol = 1e-4);

enum class Connection { Plus, Minus };

struct GeodesicSpec {
  DensityState rho0;
  DensityState rho1;
  Connection connection = Connection::Minus;
  double lambda = 0.0;
};

/// Minus: (1 - lambda) rho0 + lambda rho1. Plus: the normalized state of
/// exp(log rho0 - lambda X1), X1 = relative_hamiltonian(rho0, rho1).
DensityState geodesic(const GeodesicSpec& spec);

struct PairingCheck {
  double direct = 0.0;  ///< bkm_inner(X, Y, rho)
  double mixed = 0.0;   ///< Tr(X lower_index(Y, rho))
};

PairingCheck duality_pairing_check(const DensityState& rho, const HermitianOperator& x,
                                   const HermitianOperator& y);

struct InequalityCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// lhs = ||rho - sigma||_1, rhs = ||X||, sigma = normalized exp(log rho - X).
InequalityCheck trace_norm_bound_check(const DensityState& rho, const HermitianOperator& x,
                                       double tol = 1e-10);

/// lhs = ||rho - sigma||_1^2, rhs = S(rho | sigma) + S(sigma | rho).
InequalityCheck kullback_inequality_check(const DensityState& rho, const DensityState& sigma,
                                          double tol = 1e-10);

/// rho0^t rho1^{-t}, |t| <= 1/2.
Matrix connes_cocycle(const FiniteWeight& rho0, const FiniteWeight& rho1, double t);

struct HoodEquivalence {
  double ratio = 1.0;  ///< araki_norm(X, rho1) / araki_norm(X, rho0)
  double k = 1.0;      ///< max_t ||rho1^t rho0^{-t}|| ||rho0^t rho1^{-t}||
  bool holds = true;
};

inline constexpr std::size_t kCocycleGridPoints = 101;

/// Compares the Araki norms at two nearby base points through the Connes
/// cocycle envelope K on a t-grid over [-1/2, 1/2].
HoodEquivalence hood_norm_equivalence(const FiniteWeight& rho0, const FiniteWeight& rho1,
                                      const HermitianOperator& x,
                                      std::size_t grid_points = kCocycleGridPoints);

struct SeparationRow {
  Index n = 0;
  double delta = 0.0;
  double trace_dist = 0.0;   ///< ||sigma_n - rho_n||_1
  double rel_entropy = 0.0;  ///< S(sigma_n | rho_n)
};

/// rho_n = normalized diag(2^{-i}), i = 1..n;
/// sigma_n = (1 - delta) rho_n + delta |e_n><e_n|.
SeparationRow separation_point(Index n, double delta);

struct SeparationSweep {
  std::vector<SeparationRow> rows;
  bool trace_dist_decreasing = true;
  /// Strictly increasing over the rows with n >= entropy_onset.
  bool rel_entropy_increasing = true;
  Index entropy_onset = 16;
};

/// separation_point(n, n^{-1/2}) for n = 4, 8, ..., nmax (powers of two).
SeparationSweep separation_demo(Index nmax, Index entropy_onset = 16);

}  // namespace qig
