#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "teleport/states.hpp"

namespace teleport {

using Rng = std::mt19937_64;

/// Stream for restart or grid index `index` under a base seed.
inline Rng derived_rng(std::uint64_t seed, std::uint64_t index) { return Rng(seed ^ index); }

ComplexMatrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Haar-distributed n x n unitary (QR of a Ginibre matrix with the phase fix).
ComplexMatrix haar_unitary(int n, Rng& rng);

/// First `cols` columns of a Haar unitary.
ComplexMatrix haar_isometry(int rows, int cols, Rng& rng);

/// Uniform (Dirichlet(1,...,1)) point on the probability simplex, padded with zeros to `length`.
std::vector<double> dirichlet_spectrum(int nonzero, int length, Rng& rng);

/// Haar-random pure state on C^d (x) C^d.
PureBipartiteState random_pure_state(int d, Rng& rng);

/// Pure state with exactly `rank` Schmidt coefficients drawn from the simplex,
/// rotated by random local unitaries.
PureBipartiteState random_pure_state_with_rank(int d, int rank, Rng& rng);

/// Induced-measure density matrix G G^dagger / tr with G of shape d^2 x rank.
DensityMatrix random_density_matrix(int d, Rng& rng, int rank = 0);

/// p |Phi+><Phi+| + (1-p) I/d^2.
DensityMatrix isotropic_state(int d, double p);

/// Pure state built from the diagonal amplitudes sqrt(lambda_i) |ii>.
PureBipartiteState state_from_spectrum(const std::vector<double>& lambdas, int d);

/// (1/sqrt(d)) sum_k |kk>.
PureBipartiteState maximally_entangled(int d);

} // namespace teleport
