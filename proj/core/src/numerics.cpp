#include "teleport/numerics.hpp"

#include <cmath>

namespace teleport {

bool all_finite(const ComplexMatrix& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

void require_finite(const ComplexMatrix& m, const char* what) {
  if (!all_finite(m)) throw InvariantViolation(std::string(what) + ": non-finite entry");
}

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() != m.cols() || m.rows() == 0)
    throw InvariantViolation(std::string(what) + ": expected a non-empty square matrix, got " +
                             std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

double hermiticity_error(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return INFINITY;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const Eigen::Index rows = a.rows() * b.rows();
  const Eigen::Index cols = a.cols() * b.cols();
  if (rows > kMaxDimension || cols > kMaxDimension)
    throw std::length_error("kron: result " + std::to_string(rows) + "x" + std::to_string(cols) +
                            " exceeds dimension limit");
  ComplexMatrix out(rows, cols);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, int d, Subsystem which) {
  require_square(rho, "partial_transpose");
  if (d < 1 || rho.rows() != static_cast<Eigen::Index>(d) * d)
    throw InvariantViolation("partial_transpose: matrix is not d^2 x d^2 for d=" + std::to_string(d));
  ComplexMatrix out(rho.rows(), rho.cols());
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          const Complex value = rho(i * d + k, j * d + l);
          if (which == Subsystem::A)
            out(j * d + k, i * d + l) = value;
          else
            out(i * d + l, j * d + k) = value;
        }
  return out;
}

double trace_norm(const ComplexMatrix& m) {
  require_square(m, "trace_norm");
  if (hermiticity_error(m) <= 1e-12) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().sum();
  }
  return svd(m).singular_values.sum();
}

SvdResult svd(const ComplexMatrix& m) {
  require_finite(m, "svd");
  if (m.rows() > kMaxDimension || m.cols() > kMaxDimension)
    throw std::length_error("svd: matrix exceeds dimension limit");
  Eigen::JacobiSVD<ComplexMatrix> solver(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  SvdResult out{solver.matrixU(), solver.singularValues(), solver.matrixV()};
  if (!out.singular_values.allFinite() || !all_finite(out.u) || !all_finite(out.v))
    throw NumericFailure("svd: iteration produced non-finite factors");
  return out;
}

HermitianEigenResult herm_eig(const ComplexMatrix& m) {
  require_square(m, "herm_eig");
  require_finite(m, "herm_eig");
  const double err = hermiticity_error(m);
  if (err > 1e-10)
    throw InvariantViolation("herm_eig: input is not hermitian (deviation " + std::to_string(err) + ")");
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (m + m.adjoint()));
  if (es.info() != Eigen::Success) throw NumericFailure("herm_eig: eigensolver did not converge");
  return {es.eigenvalues(), es.eigenvectors()};
}

ComplexMatrix unitary_exp(const ComplexMatrix& h, double t) {
  const auto eig = herm_eig(h);
  ComplexVector phases(eig.eigenvalues.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k)
    phases(k) = std::polar(1.0, t * eig.eigenvalues(k));
  return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

ComplexMatrix unvec(const ComplexVector& v, int d) {
  if (v.size() != static_cast<Eigen::Index>(d) * d)
    throw InvariantViolation("unvec: vector length is not d^2");
  ComplexMatrix m(d, d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) m(j, k) = v(j * d + k);
  return m;
}

ComplexVector vec(const ComplexMatrix& m) {
  ComplexVector v(m.rows() * m.cols());
  for (Eigen::Index j = 0; j < m.rows(); ++j)
    for (Eigen::Index k = 0; k < m.cols(); ++k) v(j * m.cols() + k) = m(j, k);
  return v;
}

} // namespace teleport
