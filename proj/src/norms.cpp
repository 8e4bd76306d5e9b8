#include "qig/norms.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qig/kernels.hpp"

namespace qig {

double schatten_p_norm(const HermitianOperator& a, double p) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    std::ostringstream os;
    os << "schatten_p_norm: exponent must be a finite p > 0, got " << p;
    throw InvalidArgument(os.str());
  }
  const RealVector s = eigenvalues(a).cwiseAbs();
  const double m = s.maxCoeff();
  if (m == 0.0) return 0.0;
  double acc = 0.0;
  for (Index i = 0; i < s.size(); ++i) acc += std::pow(s(i) / m, p);
  return m * std::pow(acc, 1.0 / p);
}

double trace_norm(const HermitianOperator& a) { return eigenvalues(a).cwiseAbs().sum(); }

EpsilonNormParams::EpsilonNormParams(double epsilon, FiniteWeight base)
    : epsilon_(epsilon), base_(std::move(base)) {
  if (!(epsilon >= 0.0 && epsilon <= 0.5)) {
    std::ostringstream os;
    os << "EpsilonNormParams: epsilon must lie in [0, 1/2], got " << epsilon;
    throw InvalidArgument(os.str());
  }
}

RealVector EpsilonNormParams::h0_eigenvalues() const {
  const RealVector logs = base_.log_eigenvalues();
  return (logs.maxCoeff() - logs.array()).matrix();
}

double epsilon_norm(const HermitianOperator& x, const EpsilonNormParams& params) {
  require_same_dim(x, params.base().op(), "epsilon_norm");
  const RealVector h = params.h0_eigenvalues();
  const double eps = params.epsilon();
  const RealVector left = (1.0 + h.array()).pow(-1.0 + eps).matrix();
  const RealVector right = (1.0 + h.array()).pow(-eps).matrix();
  const Matrix xe = params.base().spectrum().to_eigenbasis(x.matrix());
  return spectral_norm(left.asDiagonal() * xe * right.asDiagonal());
}

double araki_norm(const HermitianOperator& x, const FiniteWeight& rho) {
  require_same_dim(x, rho.op(), "araki_norm");
  const Matrix xe = rho.spectrum().to_eigenbasis(x.matrix());
  const RealVector logs = rho.log_eigenvalues();
  const double ends[2] = {-0.5, 0.5};
  return kernels::serial::conjugation_norm_max(xe, logs, ends);
}

double araki_norm_scan(const HermitianOperator& x, const FiniteWeight& rho,
                       std::size_t grid_points) {
  require_same_dim(x, rho.op(), "araki_norm_scan");
  if (grid_points < 3) throw InvalidArgument("araki_norm_scan: need at least 3 grid points");
  const Matrix xe = rho.spectrum().to_eigenbasis(x.matrix());
  const auto ts = linspace(-0.5, 0.5, grid_points);
  return kernels::omp::conjugation_norm_max(xe, rho.log_eigenvalues(), ts);
}

double bkm_inner(const HermitianOperator& x, const HermitianOperator& y, const FiniteWeight& rho) {
  require_same_dim(x, rho.op(), "bkm_inner");
  require_same_dim(y, rho.op(), "bkm_inner");
  const auto& s = rho.spectrum();
  const Matrix xe = s.to_eigenbasis(x.matrix());
  const Matrix ye = s.to_eigenbasis(y.matrix());
  const Eigen::MatrixXd k = kernels::omp::log_mean_kernel(s.eigenvalues);
  return (xe.conjugate().array() * ye.array() * k.array().cast<Complex>()).sum().real();
}

double bkm_norm(const HermitianOperator& x, const FiniteWeight& rho) {
  return std::sqrt(std::max(0.0, bkm_inner(x, x, rho)));
}

std::map<std::string, double> NormReport::to_map() const {
  return {{"araki_norm", araki_norm},       {"bkm_norm", bkm_norm},
          {"epsilon", epsilon},             {"epsilon_norm", epsilon_norm},
          {"operator_norm", operator_norm}, {"schatten_p", schatten_p},
          {"schatten_p_norm", schatten_p_norm}, {"trace_norm", trace_norm}};
}

NormReport norm_report(const HermitianOperator& x, const FiniteWeight& base, double epsilon,
                       double schatten_p) {
  NormReport r;
  r.operator_norm = operator_norm(x);
  r.trace_norm = trace_norm(x);
  r.schatten_p = schatten_p;
  r.schatten_p_norm = schatten_p_norm(x, schatten_p);
  r.epsilon = epsilon;
  r.epsilon_norm = epsilon_norm(x, EpsilonNormParams(epsilon, base));
  r.araki_norm = araki_norm(x, base);
  r.bkm_norm = bkm_norm(x, DensityState::normalized(base));
  return r;
}

}  // namespace qig
