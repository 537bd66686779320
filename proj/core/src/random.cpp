#include "teleport/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace teleport {

ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  return g;
}

ComplexMatrix haar_unitary(int n, Rng& rng) {
  const ComplexMatrix g = ginibre(n, n, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < n; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

ComplexMatrix haar_isometry(int rows, int cols, Rng& rng) {
  return haar_unitary(rows, rng).leftCols(cols);
}

std::vector<double> dirichlet_spectrum(int nonzero, int length, Rng& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> out(static_cast<std::size_t>(length), 0.0);
  double total = 0.0;
  for (int i = 0; i < nonzero; ++i) {
    // Keep coefficients away from exact zero so the requested rank is exact.
    out[static_cast<std::size_t>(i)] = expo(rng) + 1e-6;
    total += out[static_cast<std::size_t>(i)];
  }
  for (double& x : out) x /= total;
  return out;
}

PureBipartiteState random_pure_state(int d, Rng& rng) {
  return PureBipartiteState::normalized(ginibre(d, d, rng));
}

PureBipartiteState state_from_spectrum(const std::vector<double>& lambdas, int d) {
  ComplexMatrix amp = ComplexMatrix::Zero(d, d);
  for (int i = 0; i < d && i < static_cast<int>(lambdas.size()); ++i)
    amp(i, i) = std::sqrt(std::max(0.0, lambdas[static_cast<std::size_t>(i)]));
  return PureBipartiteState::normalized(std::move(amp));
}

PureBipartiteState random_pure_state_with_rank(int d, int rank, Rng& rng) {
  const auto lambdas = dirichlet_spectrum(rank, d, rng);
  const ComplexMatrix diag = state_from_spectrum(lambdas, d).amplitudes();
  const ComplexMatrix u = haar_unitary(d, rng);
  const ComplexMatrix v = haar_unitary(d, rng);
  // (U (x) V) sum amp(j,k)|j>|k> has amplitudes U amp V^T.
  return PureBipartiteState::normalized(u * diag * v.transpose());
}

DensityMatrix random_density_matrix(int d, Rng& rng, int rank) {
  const int n = d * d;
  if (rank <= 0 || rank > n) rank = n;
  const ComplexMatrix g = ginibre(n, rank, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace();
  rho = 0.5 * (rho + rho.adjoint());
  return DensityMatrix(std::move(rho), d);
}

PureBipartiteState maximally_entangled(int d) {
  return PureBipartiteState(ComplexMatrix::Identity(d, d) / std::sqrt(static_cast<double>(d)));
}

DensityMatrix isotropic_state(int d, double p) {
  const int n = d * d;
  ComplexMatrix rho = p * maximally_entangled(d).projector() +
                      (1.0 - p) * ComplexMatrix::Identity(n, n) / static_cast<double>(n);
  return DensityMatrix(std::move(rho), d);
}

} // namespace teleport
