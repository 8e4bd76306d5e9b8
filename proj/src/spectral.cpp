#include "qig/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace qig {

HermitianOperator::HermitianOperator(const Matrix& m) {
  if (m.rows() < 1 || m.rows() != m.cols()) {
    std::ostringstream os;
    os << "HermitianOperator: expected a non-empty square matrix, got " << m.rows() << "x"
       << m.cols();
    throw DimensionMismatch(os.str());
  }
  const Matrix adj = m.adjoint();
  m_ = (m + adj) * 0.5;
  residual_ = ((m - adj) * 0.5).norm();
}

HermitianOperator HermitianOperator::zero(Index n) { return HermitianOperator(Matrix::Zero(n, n)); }

HermitianOperator HermitianOperator::identity(Index n) {
  return HermitianOperator(Matrix::Identity(n, n));
}

HermitianOperator HermitianOperator::diagonal(const RealVector& d) {
  return HermitianOperator(Matrix(d.cast<Complex>().asDiagonal()));
}

void require_same_dim(const HermitianOperator& a, const HermitianOperator& b, const char* where) {
  if (a.dim() != b.dim()) {
    std::ostringstream os;
    os << where << ": dimension mismatch (" << a.dim() << " vs " << b.dim() << ")";
    throw DimensionMismatch(os.str());
  }
}

HermitianOperator& HermitianOperator::operator+=(const HermitianOperator& o) {
  require_same_dim(*this, o, "operator+");
  m_ += o.m_;
  return *this;
}

HermitianOperator& HermitianOperator::operator-=(const HermitianOperator& o) {
  require_same_dim(*this, o, "operator-");
  m_ -= o.m_;
  return *this;
}

HermitianOperator& HermitianOperator::operator*=(double c) {
  m_ *= c;
  return *this;
}

HermitianOperator operator+(HermitianOperator a, const HermitianOperator& b) { return a += b; }
HermitianOperator operator-(HermitianOperator a, const HermitianOperator& b) { return a -= b; }
HermitianOperator operator-(HermitianOperator a) { return a *= -1.0; }
HermitianOperator operator*(double c, HermitianOperator a) { return a *= c; }
HermitianOperator operator*(HermitianOperator a, double c) { return a *= c; }

double trace_product(const HermitianOperator& a, const HermitianOperator& b) {
  require_same_dim(a, b, "trace_product");
  // Tr(AB) = sum_ij A_ij B_ji = sum_ij A_ij conj(B_ij) for Hermitian B.
  return (a.matrix().array() * b.matrix().conjugate().array()).sum().real();
}

double SpectralDecomposition::reconstruction_residual(const HermitianOperator& a) const {
  return (eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint() -
          a.matrix())
      .norm();
}

double SpectralDecomposition::orthonormality_residual() const {
  const Index n = dim();
  return (eigenvectors.adjoint() * eigenvectors - Matrix::Identity(n, n)).norm();
}

namespace {

void canonicalize_phase(Eigen::Ref<Eigen::VectorXcd> v) {
  Index best = 0;
  double best_abs = -1.0;
  for (Index i = 0; i < v.size(); ++i) {
    // Strict comparison keeps the first index among ties.
    const double a = std::abs(v(i));
    if (a > best_abs * (1.0 + 1e-12)) {
      best_abs = a;
      best = i;
    }
  }
  if (best_abs > 0.0) v *= std::conj(v(best)) / best_abs;
}

// Replace the columns [begin, end) of `vecs` by a canonical orthonormal basis
// of their span: Gram-Schmidt on P e_0, P e_1, ..., P the cluster projector.
void canonicalize_cluster(Matrix& vecs, Index begin, Index end) {
  const Index n = vecs.rows();
  const Index k = end - begin;
  const Matrix block = vecs.middleCols(begin, k);
  Matrix basis(n, k);
  Index found = 0;
  for (Index j = 0; j < n && found < k; ++j) {
    // P e_j = block * block^dagger e_j
    Eigen::VectorXcd v = block * block.row(j).adjoint();
    for (int pass = 0; pass < 2; ++pass) {
      for (Index q = 0; q < found; ++q) v -= basis.col(q) * basis.col(q).dot(v);
    }
    const double nv = v.norm();
    if (nv > 1e-3 / std::sqrt(static_cast<double>(n))) {
      basis.col(found++) = v / nv;
    }
  }
  if (found < k) return;  // projector too ill-conditioned; keep solver basis
  vecs.middleCols(begin, k) = basis;
}

}  // namespace

SpectralDecomposition eig(const HermitianOperator& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a.matrix());
  if (solver.info() != Eigen::Success) {
    std::ostringstream os;
    os << "eig: self-adjoint eigensolver did not converge (dim=" << a.dim()
       << ", frobenius norm=" << a.frobenius_norm() << ")";
    throw ConvergenceError(os.str());
  }
  SpectralDecomposition d{solver.eigenvalues(), solver.eigenvectors()};
  const Index n = d.dim();
  const double scale = std::max(1.0, d.eigenvalues.cwiseAbs().maxCoeff());
  const double gap_tol = kEigTolerance * scale;
  Index begin = 0;
  while (begin < n) {
    Index end = begin + 1;
    while (end < n && d.eigenvalues(end) - d.eigenvalues(end - 1) <= gap_tol) ++end;
    if (end - begin > 1) canonicalize_cluster(d.eigenvectors, begin, end);
    begin = end;
  }
  for (Index j = 0; j < n; ++j) canonicalize_phase(d.eigenvectors.col(j));
  return d;
}

RealVector eigenvalues(const HermitianOperator& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(a.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    std::ostringstream os;
    os << "eigenvalues: self-adjoint eigensolver did not converge (dim=" << a.dim()
       << ", frobenius norm=" << a.frobenius_norm() << ")";
    throw ConvergenceError(os.str());
  }
  return solver.eigenvalues();
}

const char* domain_name(Domain d) {
  switch (d) {
    case Domain::Real: return "real line";
    case Domain::NonNegative: return "[0, inf)";
    case Domain::Positive: return "(0, inf)";
  }
  return "?";
}

void check_domain(const SpectralDecomposition& d, Domain domain, const char* fname) {
  for (Index i = 0; i < d.dim(); ++i) {
    const double x = d.eigenvalues(i);
    const bool ok = std::isfinite(x) && (domain == Domain::Real ||
                                         (domain == Domain::NonNegative && x >= 0.0) ||
                                         (domain == Domain::Positive && x > 0.0));
    if (!ok) {
      std::ostringstream os;
      os.precision(17);
      os << "matfun(" << fname << "): eigenvalue " << x << " (index " << i
         << ") outside domain " << domain_name(domain);
      throw DomainError(os.str());
    }
  }
}

HermitianOperator matrix_log(const HermitianOperator& a) {
  return matfun(a, [](double x) { return std::log(x); }, Domain::Positive, "log");
}

HermitianOperator matrix_exp(const HermitianOperator& a) {
  return matfun(a, [](double x) { return std::exp(x); }, Domain::Real, "exp");
}

HermitianOperator matrix_sqrt(const HermitianOperator& a) {
  return matfun(a, [](double x) { return std::sqrt(x); }, Domain::NonNegative, "sqrt");
}

HermitianOperator matrix_power(const HermitianOperator& a, double t) {
  const Domain dom = t > 0.0 ? Domain::NonNegative : Domain::Positive;
  return matfun(a, [t](double x) { return std::pow(x, t); }, dom, "pow");
}

double operator_norm(const HermitianOperator& a) {
  return eigenvalues(a).cwiseAbs().maxCoeff();
}

double spectral_norm(const Matrix& m) {
  if (m.rows() == 0) return 0.0;
  const Matrix gram = m.adjoint() * m;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(gram, Eigen::EigenvaluesOnly);
  return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

double loewner_margin(const HermitianOperator& a, const HermitianOperator& b) {
  require_same_dim(a, b, "loewner_leq");
  const RealVector ea = eigenvalues(a);
  const RealVector eb = eigenvalues(b);
  const double scale =
      std::max({1.0, ea.cwiseAbs().maxCoeff(), eb.cwiseAbs().maxCoeff()});
  return eigenvalues(b - a).minCoeff() / scale;
}

bool loewner_leq(const HermitianOperator& a, const HermitianOperator& b, double tol) {
  return loewner_margin(a, b) >= -tol;
}

}  // namespace qig
