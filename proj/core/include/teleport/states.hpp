#pragma once

#include <vector>

#include "teleport/numerics.hpp"

namespace teleport {

inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kDefaultRankTolerance = 1e-9;

/// |Psi> = sum_{j,k} amp(j,k) |j>|k> on C^d (x) C^d.
class PureBipartiteState {
public:
  /// Throws InvariantViolation unless amp is square, finite and unit-norm within 1e-10.
  explicit PureBipartiteState(ComplexMatrix amp);

  /// Builds from the row-major state vector of length d^2.
  static PureBipartiteState from_vector(const ComplexVector& psi, int d);

  /// Normalizes a nonzero amplitude matrix first.
  static PureBipartiteState normalized(ComplexMatrix amp);

  int dim() const { return static_cast<int>(amp_.rows()); }
  const ComplexMatrix& amplitudes() const { return amp_; }
  ComplexVector vector() const { return vec(amp_); }
  ComplexMatrix projector() const;

private:
  ComplexMatrix amp_;
};

/// Schmidt coefficients (squared singular values of the amplitude matrix).
class SchmidtSpectrum {
public:
  /// Sorts descending. Throws unless entries are >= -1e-12 and sum to 1 within 1e-10.
  explicit SchmidtSpectrum(std::vector<double> lambdas, double rank_tol = kDefaultRankTolerance);

  const std::vector<double>& lambdas() const { return lambdas_; }
  double rank_tol() const { return rank_tol_; }
  int rank() const;
  int size() const { return static_cast<int>(lambdas_.size()); }
  double operator[](int i) const { return i < size() ? lambdas_[i] : 0.0; }

private:
  std::vector<double> lambdas_;
  double rank_tol_;
};

class DensityMatrix {
public:
  /// Throws InvariantViolation unless mat is d^2 x d^2, hermitian within 1e-10,
  /// unit trace within 1e-10 and has min eigenvalue >= -1e-9.
  DensityMatrix(ComplexMatrix mat, int d);

  static DensityMatrix from_pure(const PureBipartiteState& psi);
  static DensityMatrix maximally_mixed(int d);

  int dim() const { return d_; }
  const ComplexMatrix& matrix() const { return mat_; }

private:
  ComplexMatrix mat_;
  int d_;
};

/// rho = sum_i p_i |Psi_i><Psi_i|.
struct PureDecomposition {
  std::vector<double> weights;
  std::vector<PureBipartiteState> states;

  std::size_t size() const { return weights.size(); }
  ComplexMatrix reconstruct() const;
  /// Frobenius distance between the reconstruction and rho.
  double reconstruction_error(const DensityMatrix& rho) const;
};

inline constexpr double kReconstructionTolerance = 1e-8;

SchmidtSpectrum schmidt(const PureBipartiteState& state, double rank_tol = kDefaultRankTolerance);

/// Eigen-ensemble of rho, keeping eigenvalues above 1e-12.
PureDecomposition spectral_decomposition(const DensityMatrix& rho);

/// The pieces of rho's eigen-ensemble that every other decomposition is built from:
/// columns b_j = sqrt(e_j) |v_j> for the retained eigenpairs.
ComplexMatrix scaled_eigenvectors(const DensityMatrix& rho);

/// Unnormalized members psi_i = sum_j mix(i,j) sqrt(e_j) |v_j>. mix must be an
/// isometry (mix^dagger mix = I, deviation <= 1e-8) with one column per retained
/// eigenpair; row counts up to max_members are accepted.
PureDecomposition hjw_decomposition(const DensityMatrix& rho, const ComplexMatrix& mix,
                                    int max_members = 64);

/// The isometry that maps the eigen-ensemble of rho onto a given decomposition.
ComplexMatrix mixing_isometry(const DensityMatrix& rho, const PureDecomposition& decomp);

/// Largest Schmidt rank among decomposition members.
int max_schmidt_rank(const PureDecomposition& decomp, double rank_tol = kDefaultRankTolerance);

} // namespace teleport
