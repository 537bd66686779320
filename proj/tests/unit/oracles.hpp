#pragma once

// Slow, loop-based reference implementations used as test oracles.

#include <algorithm>
#include <array>
#include <cmath>

#include "teleport/numerics.hpp"

namespace oracle {

using teleport::Complex;
using teleport::ComplexMatrix;

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

// <i k| rho^{T_A} |j l> = <j k| rho |i l>
inline ComplexMatrix partial_transpose_a(const ComplexMatrix& rho, int d) {
  ComplexMatrix out(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      for (int j = 0; j < d; ++j)
        for (int l = 0; l < d; ++l) out(i * d + k, j * d + l) = rho(j * d + k, i * d + l);
  return out;
}

inline ComplexMatrix partial_transpose_b(const ComplexMatrix& rho, int d) {
  ComplexMatrix out(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int k = 0; k < d; ++k)
      for (int j = 0; j < d; ++j)
        for (int l = 0; l < d; ++l) out(i * d + k, j * d + l) = rho(i * d + l, j * d + k);
  return out;
}

// Wootters: eigenvalues of the non-hermitian rho (sy x sy) rho* (sy x sy).
inline double concurrence(const ComplexMatrix& rho) {
  ComplexMatrix yy = ComplexMatrix::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const ComplexMatrix r = rho * yy * rho.conjugate() * yy;
  Eigen::ComplexEigenSolver<ComplexMatrix> es(r);
  std::array<double, 4> mu{};
  for (int i = 0; i < 4; ++i) mu[static_cast<std::size_t>(i)] = std::sqrt(std::max(0.0, es.eigenvalues()(i).real()));
  std::sort(mu.rbegin(), mu.rend());
  return std::max(0.0, mu[0] - mu[1] - mu[2] - mu[3]);
}

inline double trace_norm(const ComplexMatrix& m) {
  Eigen::JacobiSVD<ComplexMatrix> svd(m);
  return svd.singularValues().sum();
}

} // namespace oracle
