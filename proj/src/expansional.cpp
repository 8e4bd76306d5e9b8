#include "qig/expansional.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "qig/norms.hpp"

namespace qig {

Perturbation::Perturbation(FiniteWeight base, HermitianOperator x)
    : base_(std::move(base)), x_(std::move(x)) {
  require_same_dim(base_.op(), x_, "Perturbation");
}

double Perturbation::expectation() const { return trace_product(base_.op(), x_) / base_.trace(); }

bool Perturbation::centered(double tol) const { return std::abs(expectation()) <= tol; }

FiniteWeight perturbed_weight(const FiniteWeight& rho, const HermitianOperator& x) {
  require_same_dim(rho.op(), x, "perturbed_weight");
  const SpectralDecomposition d = eig(rho.log() - x);
  return FiniteWeight::from_spectrum(d.eigenvalues.array().exp().matrix(), d.eigenvectors);
}

FiniteWeight perturbed_weight(const Perturbation& pert) {
  return perturbed_weight(pert.base(), pert.x());
}

PerturbedState perturbed_state(const FiniteWeight& rho, const HermitianOperator& x) {
  require_same_dim(rho.op(), x, "perturbed_state");
  const SpectralDecomposition d = eig(rho.log() - x);
  const double top = d.max();
  const double sum = (d.eigenvalues.array() - top).exp().sum();
  const double psi = top + std::log(sum);
  RealVector w = (d.eigenvalues.array() - psi).exp().matrix();
  DensityState state(FiniteWeight::from_spectrum(w, d.eigenvectors));
  return PerturbedState{std::move(state), FreeEnergy{psi, std::exp(psi)}};
}

PerturbedState perturbed_state(const Perturbation& pert) {
  return perturbed_state(pert.base(), pert.x());
}

Perturbation center(const Perturbation& pert) {
  const double e = pert.expectation();
  return Perturbation(pert.base(), pert.x() - HermitianOperator::identity(pert.x().dim()) * e);
}

HermitianOperator relative_hamiltonian(const FiniteWeight& rho, const FiniteWeight& sigma) {
  require_same_dim(rho.op(), sigma.op(), "relative_hamiltonian");
  return rho.log() - sigma.log();
}

namespace {

void check_order(int order, const char* where) {
  if (order < 0 || order > kMaxSeriesOrder) {
    std::ostringstream os;
    os << where << ": truncation order " << order << " outside [0, " << kMaxSeriesOrder
       << "]; use perturbed_weight (direct spectral exponential) instead";
    throw InvalidArgument(os.str());
  }
}

double one_norm(const Matrix& m) { return m.cwiseAbs().colwise().sum().maxCoeff(); }

// Coefficients of a truncated matrix power series in a formal variable s.
using Series = std::vector<Matrix>;

Series truncated_product(const Series& p, const Series& q) {
  const std::size_t len = p.size();
  Series r(len, Matrix::Zero(p[0].rows(), p[0].cols()));
  for (std::size_t n = 0; n < len; ++n)
    for (std::size_t j = 0; j <= n; ++j) r[n].noalias() += p[j] * q[n - j];
  return r;
}

double series_norm(const Series& s) {
  double acc = 0.0;
  for (const auto& m : s) acc += one_norm(m);
  return acc;
}

}  // namespace

std::vector<Matrix> expansional_coefficients(const Matrix& a, const Matrix& b, int order) {
  check_order(order, "expansional_coefficients");
  if (a.rows() != a.cols() || b.rows() != a.rows() || b.cols() != a.cols()) {
    throw DimensionMismatch("expansional_coefficients: A and B must be square and equal-sized");
  }
  const Index n = a.rows();
  const std::size_t len = static_cast<std::size_t>(order) + 1;

  // exp(Y) with Y = A + sB in the algebra of series truncated after s^N:
  // Taylor on Y / 2^k, then k squarings.
  const double norm = one_norm(a) + one_norm(b);
  int k = 0;
  if (norm > 0.5) k = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const double scale = std::ldexp(1.0, -k);
  const Matrix as = a * scale;
  const Matrix bs = b * scale;

  Series e(len, Matrix::Zero(n, n));
  Series term(len, Matrix::Zero(n, n));
  e[0].setIdentity();
  term[0].setIdentity();
  constexpr double eps = std::numeric_limits<double>::epsilon();
  for (int m = 1; m <= 40; ++m) {
    Series next(len, Matrix::Zero(n, n));
    for (std::size_t j = 0; j < len; ++j) {
      next[j].noalias() += term[j] * as;
      if (j > 0) next[j].noalias() += term[j - 1] * bs;
      next[j] /= static_cast<double>(m);
    }
    term = std::move(next);
    for (std::size_t j = 0; j < len; ++j) e[j] += term[j];
    if (series_norm(term) <= 0.25 * eps * series_norm(e)) break;
  }
  for (int sq = 0; sq < k; ++sq) e = truncated_product(e, e);
  return e;
}

double exp_divided_difference(std::span<const double> nodes) {
  if (nodes.empty()) throw InvalidArgument("exp_divided_difference: need at least one node");
  const Index m = static_cast<Index>(nodes.size());
  // Opitz: exp of the bidiagonal matrix with the nodes on the diagonal and
  // ones above it carries exp[x_0..x_{m-1}] in its top-right entry. That matrix
  // is A + B with A diagonal and B the shift, so the top-right entry is the
  // order m-1 coefficient of exp(A + sB).
  Matrix a = Matrix::Zero(m, m);
  Matrix b = Matrix::Zero(m, m);
  for (Index i = 0; i < m; ++i) a(i, i) = nodes[static_cast<std::size_t>(i)];
  for (Index i = 0; i + 1 < m; ++i) b(i, i + 1) = 1.0;
  const auto coeffs = expansional_coefficients(a, b, static_cast<int>(m - 1));
  return coeffs.back()(0, m - 1).real();
}

double exponential_tail(double m, int order) {
  if (m < 0.0) throw InvalidArgument("exponential_tail: M must be >= 0");
  if (m == 0.0) return 0.0;
  // First omitted term M^{N+1}/(N+1)!, then accumulate until negligible.
  double t = 1.0;
  for (int j = 1; j <= order + 1; ++j) t *= m / static_cast<double>(j);
  double acc = 0.0;
  for (int j = order + 2; t > 0.0; ++j) {
    acc += t;
    if (t <= std::numeric_limits<double>::epsilon() * acc * 1e-3) break;
    t *= m / static_cast<double>(j);
  }
  return acc;
}

double ExpansionResult::remainder_bound_at(int k) const {
  if (k < 0 || k > order) throw InvalidArgument("remainder_bound_at: order out of range");
  return remainder_scale * exponential_tail(araki_m, k);
}

namespace {

ExpansionResult assemble(const SpectralDecomposition& s, const std::vector<Matrix>& coeffs,
                         int order, double m, double scale) {
  Matrix partial = Matrix::Zero(s.dim(), s.dim());
  std::vector<double> norms;
  std::vector<HermitianOperator> sums;
  norms.reserve(coeffs.size());
  sums.reserve(coeffs.size());
  for (const auto& c : coeffs) {
    partial += c;
    norms.push_back(spectral_norm(c));
    sums.emplace_back(s.from_eigenbasis(partial));
  }
  HermitianOperator last = sums.back();
  return ExpansionResult{order,           std::move(last), scale * exponential_tail(m, order), m,
                         scale,           std::move(norms), std::move(sums)};
}

}  // namespace

ExpansionResult dyson_series(const FiniteWeight& rho, const HermitianOperator& x, int order) {
  check_order(order, "dyson_series");
  require_same_dim(rho.op(), x, "dyson_series");
  const auto& s = rho.spectrum();
  const Matrix a = rho.log_eigenvalues().cast<Complex>().asDiagonal();
  const Matrix b = -s.to_eigenbasis(x.matrix());
  const auto coeffs = expansional_coefficients(a, b, order);
  return assemble(s, coeffs, order, araki_norm(x, rho), rho.max_eigenvalue());
}

ExpansionResult inverse_sandwich_series(const FiniteWeight& rho, const HermitianOperator& x,
                                        int order) {
  check_order(order, "inverse_sandwich_series");
  require_same_dim(rho.op(), x, "inverse_sandwich_series");
  const auto& s = rho.spectrum();
  const Matrix a = (-rho.log_eigenvalues()).cast<Complex>().asDiagonal();
  const Matrix b = s.to_eigenbasis(x.matrix());
  auto coeffs = expansional_coefficients(a, b, order);
  const RealVector half = s.eigenvalues.array().sqrt().matrix();
  for (auto& c : coeffs) c = half.asDiagonal() * c * half.asDiagonal();
  return assemble(s, coeffs, order, araki_norm(x, rho), 1.0);
}

SandwichBounds sandwich_bounds(const FiniteWeight& rho, const HermitianOperator& x, double tol) {
  SandwichBounds r;
  r.araki_m = araki_norm(x, rho);
  r.lower = std::exp(-r.araki_m);
  r.upper = std::exp(r.araki_m);
  const FiniteWeight rx = perturbed_weight(rho, x);
  r.lower_margin = loewner_margin(rho.op() * r.lower, rx.op());
  r.upper_margin = loewner_margin(rx.op(), rho.op() * r.upper);
  r.holds = r.lower_margin >= -tol && r.upper_margin >= -tol;
  return r;
}

FormBoundResult form_bound_check(const FiniteWeight& rho, const FiniteWeight& sigma,
                                 const NearbyCertificate& cert, double tol) {
  if (!p_nearby_check(rho, sigma, cert, tol)) {
    std::ostringstream os;
    os.precision(17);
    os << "form_bound_check: certificate (C=" << cert.c() << ", p=" << cert.p()
       << ") does not witness that sigma is p-nearby rho";
    throw PreconditionError(os.str());
  }
  const HermitianOperator h0 = -rho.log();
  const HermitianOperator x = relative_hamiltonian(rho, sigma);
  const HermitianOperator bound =
      HermitianOperator::identity(rho.dim()) * std::log(cert.c()) + h0 * cert.p();
  FormBoundResult r;
  r.margin_minus = loewner_margin(x, bound);
  r.margin_plus = loewner_margin(-x, bound);
  r.holds = r.margin_minus >= -tol && r.margin_plus >= -tol;
  return r;
}

}  // namespace qig
