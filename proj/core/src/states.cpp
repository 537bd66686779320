#include "teleport/states.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace teleport {

namespace {

constexpr double kEigenCutoff = 1e-12;

} // namespace

PureBipartiteState::PureBipartiteState(ComplexMatrix amp) : amp_(std::move(amp)) {
  require_square(amp_, "PureBipartiteState");
  require_finite(amp_, "PureBipartiteState");
  const double norm2 = amp_.squaredNorm();
  if (std::abs(norm2 - 1.0) > kNormTolerance)
    throw InvariantViolation("PureBipartiteState: squared norm " + std::to_string(norm2) + " != 1");
}

PureBipartiteState PureBipartiteState::from_vector(const ComplexVector& psi, int d) {
  return PureBipartiteState(unvec(psi, d));
}

PureBipartiteState PureBipartiteState::normalized(ComplexMatrix amp) {
  const double n = amp.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw InvariantViolation("cannot normalize a zero state");
  amp /= n;
  return PureBipartiteState(std::move(amp));
}

ComplexMatrix PureBipartiteState::projector() const {
  const ComplexVector v = vector();
  return v * v.adjoint();
}

SchmidtSpectrum::SchmidtSpectrum(std::vector<double> lambdas, double rank_tol)
    : lambdas_(std::move(lambdas)), rank_tol_(rank_tol) {
  if (lambdas_.empty()) throw InvariantViolation("SchmidtSpectrum: empty");
  if (!(rank_tol_ > 0.0)) throw InvariantViolation("SchmidtSpectrum: rank_tol must be positive");
  for (double& l : lambdas_) {
    if (!std::isfinite(l) || l < -1e-12) throw InvariantViolation("SchmidtSpectrum: negative coefficient");
    l = std::max(l, 0.0);
  }
  std::sort(lambdas_.begin(), lambdas_.end(), std::greater<>());
  const double total = std::accumulate(lambdas_.begin(), lambdas_.end(), 0.0);
  if (std::abs(total - 1.0) > kNormTolerance)
    throw InvariantViolation("SchmidtSpectrum: coefficients sum to " + std::to_string(total));
}

int SchmidtSpectrum::rank() const {
  return static_cast<int>(std::count_if(lambdas_.begin(), lambdas_.end(),
                                        [this](double l) { return l > rank_tol_; }));
}

DensityMatrix::DensityMatrix(ComplexMatrix mat, int d) : mat_(std::move(mat)), d_(d) {
  require_square(mat_, "DensityMatrix");
  require_finite(mat_, "DensityMatrix");
  if (d < 2 || mat_.rows() != static_cast<Eigen::Index>(d) * d)
    throw InvariantViolation("DensityMatrix: expected " + std::to_string(d * d) + "x" +
                             std::to_string(d * d) + " matrix");
  const double herm = hermiticity_error(mat_);
  if (herm > 1e-10)
    throw InvariantViolation("DensityMatrix: not hermitian (deviation " + std::to_string(herm) + ")");
  const Complex tr = mat_.trace();
  if (std::abs(tr - 1.0) > kNormTolerance)
    throw InvariantViolation("DensityMatrix: trace " + std::to_string(tr.real()) + " != 1");
  const double min_eig = herm_eig(mat_).eigenvalues(0);
  if (min_eig < -1e-9)
    throw InvariantViolation("DensityMatrix: negative eigenvalue " + std::to_string(min_eig));
}

DensityMatrix DensityMatrix::from_pure(const PureBipartiteState& psi) {
  return DensityMatrix(psi.projector(), psi.dim());
}

DensityMatrix DensityMatrix::maximally_mixed(int d) {
  const int n = d * d;
  return DensityMatrix(ComplexMatrix::Identity(n, n) / static_cast<double>(n), d);
}

ComplexMatrix PureDecomposition::reconstruct() const {
  if (states.empty()) return {};
  const Eigen::Index n = states.front().vector().size();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (std::size_t i = 0; i < size(); ++i) out += weights[i] * states[i].projector();
  return out;
}

double PureDecomposition::reconstruction_error(const DensityMatrix& rho) const {
  if (states.empty()) return INFINITY;
  if (states.front().dim() != rho.dim()) return INFINITY;
  return (reconstruct() - rho.matrix()).norm();
}

SchmidtSpectrum schmidt(const PureBipartiteState& state, double rank_tol) {
  const auto sv = svd(state.amplitudes()).singular_values;
  std::vector<double> lambdas(static_cast<std::size_t>(sv.size()));
  for (Eigen::Index i = 0; i < sv.size(); ++i) lambdas[static_cast<std::size_t>(i)] = sv(i) * sv(i);
  // Renormalize away the O(eps) drift of the squared singular values.
  const double total = std::accumulate(lambdas.begin(), lambdas.end(), 0.0);
  for (double& l : lambdas) l /= total;
  return SchmidtSpectrum(std::move(lambdas), rank_tol);
}

ComplexMatrix scaled_eigenvectors(const DensityMatrix& rho) {
  const auto eig = herm_eig(rho.matrix());
  std::vector<Eigen::Index> kept;
  // Descending order so the dominant component comes first.
  for (Eigen::Index k = eig.eigenvalues.size() - 1; k >= 0; --k)
    if (eig.eigenvalues(k) > kEigenCutoff) kept.push_back(k);
  ComplexMatrix b(rho.matrix().rows(), static_cast<Eigen::Index>(kept.size()));
  for (std::size_t c = 0; c < kept.size(); ++c)
    b.col(static_cast<Eigen::Index>(c)) = std::sqrt(eig.eigenvalues(kept[c])) * eig.eigenvectors.col(kept[c]);
  return b;
}

namespace {

PureDecomposition decomposition_from_columns(const ComplexMatrix& unnormalized, int d) {
  PureDecomposition out;
  for (Eigen::Index i = 0; i < unnormalized.cols(); ++i) {
    const double w = unnormalized.col(i).squaredNorm();
    if (w <= kEigenCutoff * 1e-3) continue;
    out.weights.push_back(w);
    out.states.push_back(PureBipartiteState::from_vector(unnormalized.col(i) / std::sqrt(w), d));
  }
  // Absorb the dropped mass so weights sum to one exactly.
  const double total = std::accumulate(out.weights.begin(), out.weights.end(), 0.0);
  for (double& w : out.weights) w /= total;
  return out;
}

} // namespace

PureDecomposition spectral_decomposition(const DensityMatrix& rho) {
  return decomposition_from_columns(scaled_eigenvectors(rho), rho.dim());
}

PureDecomposition hjw_decomposition(const DensityMatrix& rho, const ComplexMatrix& mix, int max_members) {
  const ComplexMatrix b = scaled_eigenvectors(rho);
  if (mix.cols() != b.cols())
    throw InvariantViolation("hjw_decomposition: mix needs one column per eigenpair (" +
                             std::to_string(b.cols()) + ")");
  if (mix.rows() < mix.cols() || mix.rows() > max_members)
    throw InvariantViolation("hjw_decomposition: member count out of range");
  require_finite(mix, "hjw_decomposition");
  const double gram_dev =
      (mix.adjoint() * mix - ComplexMatrix::Identity(mix.cols(), mix.cols())).cwiseAbs().maxCoeff();
  if (gram_dev > 1e-8)
    throw InvariantViolation("hjw_decomposition: mix is not an isometry (deviation " +
                             std::to_string(gram_dev) + ")");
  return decomposition_from_columns(b * mix.transpose(), rho.dim());
}

ComplexMatrix mixing_isometry(const DensityMatrix& rho, const PureDecomposition& decomp) {
  if (decomp.reconstruction_error(rho) > kReconstructionTolerance)
    throw InvariantViolation("mixing_isometry: decomposition does not reconstruct rho");
  const ComplexMatrix b = scaled_eigenvectors(rho);
  ComplexMatrix mix(static_cast<Eigen::Index>(decomp.size()), b.cols());
  for (std::size_t i = 0; i < decomp.size(); ++i) {
    const ComplexVector member = std::sqrt(decomp.weights[i]) * decomp.states[i].vector();
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      mix(static_cast<Eigen::Index>(i), j) = b.col(j).dot(member) / b.col(j).squaredNorm();
  }
  return mix;
}

int max_schmidt_rank(const PureDecomposition& decomp, double rank_tol) {
  int r = 0;
  for (const auto& s : decomp.states) r = std::max(r, schmidt(s, rank_tol).rank());
  return r;
}

} // namespace teleport
