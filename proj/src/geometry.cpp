#include "qig/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qig/kernels.hpp"

namespace qig {

namespace {

// sum_i lambda_i log lambda_i
double entropy_term(const RealVector& lambda) {
  double acc = 0.0;
  for (Index i = 0; i < lambda.size(); ++i) {
    const double l = lambda(i);
    acc += l * std::log(l);
  }
  return acc;
}

}  // namespace

double relative_entropy(const DensityState& rho, const DensityState& sigma) {
  require_same_dim(rho.op(), sigma.op(), "relative_entropy");
  const auto& ss = sigma.spectrum();
  // Tr rho log sigma = sum_j log mu_j <w_j| rho |w_j>
  const Matrix rw = rho.matrix() * ss.eigenvectors;
  double cross = 0.0;
  for (Index j = 0; j < ss.dim(); ++j) {
    const double diag = ss.eigenvectors.col(j).dot(rw.col(j)).real();
    cross += std::log(ss.eigenvalues(j)) * diag;
  }
  return entropy_term(rho.spectrum().eigenvalues) - cross;
}

HermitianOperator lower_index(const HermitianOperator& x, const FiniteWeight& rho) {
  require_same_dim(x, rho.op(), "lower_index");
  const auto& s = rho.spectrum();
  const Eigen::MatrixXd k = kernels::omp::log_mean_kernel(s.eigenvalues);
  const Matrix xe = s.to_eigenbasis(x.matrix());
  const Matrix lowered = (xe.array() * k.array().cast<Complex>()).matrix();
  return HermitianOperator(s.from_eigenbasis(lowered));
}

TangentPair tangent_pair(const HermitianOperator& x, const DensityState& rho) {
  return TangentPair{x, lower_index(x, rho)};
}

IdentityCheck symmetrized_entropy_identity(const DensityState& rho0, const HermitianOperator& x) {
  const DensityState sigma = perturbed_state(rho0, x).state;
  IdentityCheck r;
  r.lhs = relative_entropy(rho0, sigma) + relative_entropy(sigma, rho0);
  r.rhs = trace_product(rho0.op() - sigma.op(), x);
  return r;
}

HessianCheck bkm_hessian_check(const DensityState& rho0, const HermitianOperator& x, double h,
                               double rel_tol) {
  require_same_dim(rho0.op(), x, "bkm_hessian_check");
  if (!(h >= kMinHessianStep)) {
    std::ostringstream os;
    os << "bkm_hessian_check: step h=" << h << " below " << kMinHessianStep
       << " (second differences lose all digits to cancellation)";
    throw InvalidArgument(os.str());
  }
  const double mean = trace_product(rho0.op(), x);
  if (std::abs(mean) > 1e-10 * std::max(1.0, operator_norm(x))) {
    std::ostringstream os;
    os.precision(17);
    os << "bkm_hessian_check: X is not centered (Tr rho0 X = " << mean << ")";
    throw PreconditionError(os.str());
  }
  auto s_at = [&](double s) { return relative_entropy(rho0, perturbed_state(rho0, x * s).state); };
  auto second_difference = [&](double step) {
    return (s_at(step) + s_at(-step)) / (step * step);
  };
  HessianCheck r;
  r.closed_form = bkm_inner(x, x, rho0);
  r.fd_value = second_difference(h);
  r.fd_half_step = second_difference(0.5 * h);
  r.richardson = (4.0 * r.fd_half_step - r.fd_value) / 3.0;
  r.error_estimate = std::abs(r.fd_value - r.fd_half_step) * 4.0 / 3.0;
  // Rounding in the entropies at the half step, amplified by 1/(h/2)^2.
  const double rounding = 16.0 * std::numeric_limits<double>::epsilon() *
                          (1.0 + std::abs(entropy_term(rho0.spectrum().eigenvalues))) /
                          (0.25 * h * h);
  r.tolerance = std::min(2.0 * r.error_estimate, rel_tol * std::abs(r.closed_form)) + rounding;
  r.holds = std::abs(r.fd_value - r.closed_form) <= r.tolerance;
  return r;
}

DensityState geodesic(const GeodesicSpec& spec) {
  if (!(spec.lambda >= 0.0 && spec.lambda <= 1.0)) {
    std::ostringstream os;
    os << "geodesic: lambda must lie in [0, 1], got " << spec.lambda;
    throw InvalidArgument(os.str());
  }
  require_same_dim(spec.rho0.op(), spec.rho1.op(), "geodesic");
  if (spec.connection == Connection::Minus) {
    return DensityState(spec.rho0.op() * (1.0 - spec.lambda) + spec.rho1.op() * spec.lambda);
  }
  const HermitianOperator x1 = relative_hamiltonian(spec.rho0, spec.rho1);
  return perturbed_state(spec.rho0, x1 * spec.lambda).state;
}

PairingCheck duality_pairing_check(const DensityState& rho, const HermitianOperator& x,
                                   const HermitianOperator& y) {
  PairingCheck r;
  r.direct = bkm_inner(x, y, rho);
  r.mixed = trace_product(x, lower_index(y, rho));
  return r;
}

InequalityCheck trace_norm_bound_check(const DensityState& rho, const HermitianOperator& x,
                                       double tol) {
  const DensityState sigma = perturbed_state(rho, x).state;
  InequalityCheck r;
  r.lhs = trace_norm(rho.op() - sigma.op());
  r.rhs = operator_norm(x);
  r.holds = r.lhs <= r.rhs + tol;
  return r;
}

InequalityCheck kullback_inequality_check(const DensityState& rho, const DensityState& sigma,
                                          double tol) {
  InequalityCheck r;
  const double d = trace_norm(rho.op() - sigma.op());
  r.lhs = d * d;
  r.rhs = relative_entropy(rho, sigma) + relative_entropy(sigma, rho);
  r.holds = r.lhs <= r.rhs + tol;
  return r;
}

Matrix connes_cocycle(const FiniteWeight& rho0, const FiniteWeight& rho1, double t) {
  require_same_dim(rho0.op(), rho1.op(), "connes_cocycle");
  if (!(std::abs(t) <= 0.5)) {
    std::ostringstream os;
    os << "connes_cocycle: |t| must be <= 1/2, got " << t;
    throw InvalidArgument(os.str());
  }
  return rho0.power(t).matrix() * rho1.power(-t).matrix();
}

HoodEquivalence hood_norm_equivalence(const FiniteWeight& rho0, const FiniteWeight& rho1,
                                      const HermitianOperator& x, std::size_t grid_points) {
  require_same_dim(rho0.op(), rho1.op(), "hood_norm_equivalence");
  if (grid_points < 3 || grid_points % 2 == 0) {
    throw InvalidArgument("hood_norm_equivalence: need an odd grid of >= 3 points (t = 0, +-1/2)");
  }
  HoodEquivalence r;
  const auto ts = linspace(-0.5, 0.5, grid_points);
  r.k = kernels::omp::cocycle_envelope(rho0.spectrum(), rho1.spectrum(), ts);
  const double a0 = araki_norm(x, rho0);
  if (a0 == 0.0) {
    r.ratio = 1.0;
    r.holds = true;
    return r;
  }
  r.ratio = araki_norm(x, rho1) / a0;
  constexpr double slack = 1e-12;
  r.holds = r.ratio <= r.k * (1.0 + slack) && r.ratio * r.k >= 1.0 - slack;
  return r;
}

SeparationRow separation_point(Index n, double delta) {
  if (n < 4) throw InvalidArgument("separation_point: need n >= 4");
  if (!(delta >= 0.0 && delta < 1.0)) throw InvalidArgument("separation_point: delta in [0, 1)");
  RealVector lambda(n);
  for (Index i = 0; i < n; ++i) lambda(i) = std::ldexp(1.0, -static_cast<int>(i + 1));
  lambda /= lambda.sum();
  RealVector mu = (1.0 - delta) * lambda;
  mu(n - 1) += delta;
  const Matrix basis = Matrix::Identity(n, n);
  const DensityState rho = DensityState::from_spectrum(lambda, basis);
  const DensityState sigma = DensityState::from_spectrum(mu, basis);
  SeparationRow row;
  row.n = n;
  row.delta = delta;
  row.trace_dist = trace_norm(sigma.op() - rho.op());
  row.rel_entropy = relative_entropy(sigma, rho);
  return row;
}

SeparationSweep separation_demo(Index nmax, Index entropy_onset) {
  if (nmax < 4) throw InvalidArgument("separation_demo: nmax must be >= 4");
  SeparationSweep sweep;
  sweep.entropy_onset = entropy_onset;
  for (Index n = 4; n <= nmax; n *= 2) {
    sweep.rows.push_back(separation_point(n, 1.0 / std::sqrt(static_cast<double>(n))));
  }
  for (std::size_t k = 1; k < sweep.rows.size(); ++k) {
    const auto& prev = sweep.rows[k - 1];
    const auto& cur = sweep.rows[k];
    if (!(cur.trace_dist < prev.trace_dist)) sweep.trace_dist_decreasing = false;
    if (prev.n >= entropy_onset && !(cur.rel_entropy > prev.rel_entropy)) {
      sweep.rel_entropy_increasing = false;
    }
  }
  return sweep;
}

}  // namespace qig
