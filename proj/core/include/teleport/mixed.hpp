#pragma once

#include <optional>

#include "teleport/measures.hpp"
#include "teleport/unitary_search.hpp"

namespace teleport {

/// Fidelity of rho with the maximally entangled state (U (x) I)|psi+>.
double singlet_fraction_at(const DensityMatrix& rho, const ComplexMatrix& u);

/// Lower bound on the fully entangled fraction max_U <psi+|(U^dag (x) I) rho (U (x) I)|psi+>.
/// Restart 0 starts at U = I, the rest at Haar-random unitaries. For d = 2 the
/// closed form replaces the search value when it is larger and `use_closed_form` is set.
OptResult singlet_fraction_mixed(const DensityMatrix& rho, const OptimizerConfig& cfg,
                                 bool use_closed_form = true);

/// Two-qubit fully entangled fraction: largest eigenvalue of Re(M^dag rho M) in the
/// phase-fixed Bell (magic) basis M.
double fef_2qubit_closed_form(const DensityMatrix& rho);
/// Same, for a raw 4x4 hermitian matrix.
double fef_2qubit_closed_form(const ComplexMatrix& rho);

/// A unitary U attaining fef_2qubit_closed_form through (U (x) I)|psi+>.
ComplexMatrix fef_2qubit_maximizer(const DensityMatrix& rho);

/// sum_i p_i N(Psi_i) for a decomposition of rho; an upper bound on the convex-roof negativity.
double cren_upper_bound(const DensityMatrix& rho, const PureDecomposition& decomp);

/// sum_i p_i F(Psi_i) for a decomposition of rho.
double average_fidelity(const PureDecomposition& decomp);

enum class RoofMeasure { negativity, e_d2, e_d3 };

struct RoofSearchOptions {
  /// Cap on ensemble size as a multiple of rank(rho).
  int member_factor = 2;
  double rank_tol = kDefaultRankTolerance;
  /// Optional starting isometry for restart 0 (rows are members, one column per eigenpair).
  std::optional<ComplexMatrix> seed_mix;
};

/// Average member measure of the ensemble induced by `mix`; nullopt if some
/// member has Schmidt rank > 3 and the measure is rank-limited.
std::optional<double> roof_objective(const DensityMatrix& rho, const ComplexMatrix& mix, RoofMeasure measure,
                                     double rank_tol = kDefaultRankTolerance);

/// Minimizes the ensemble average of `measure` over mixing isometries. The result
/// is an upper bound on the convex roof; nullopt when no admissible ensemble was found.
std::optional<OptResult> convex_roof_search(const DensityMatrix& rho, RoofMeasure measure,
                                            const OptimizerConfig& cfg, const RoofSearchOptions& opts = {});

OptResult cren_estimate(const DensityMatrix& rho, const OptimizerConfig& cfg, const RoofSearchOptions& opts = {});
std::optional<OptResult> e_d2_mixed(const DensityMatrix& rho, const OptimizerConfig& cfg,
                                    const RoofSearchOptions& opts = {});
/// Throws std::domain_error for d < 3.
std::optional<OptResult> e_d3_mixed(const DensityMatrix& rho, const OptimizerConfig& cfg,
                                    const RoofSearchOptions& opts = {});

/// Full report for a density matrix. Schmidt rank is the largest member rank of
/// the spectral decomposition.
MeasureReport classify_mixed(const DensityMatrix& rho, const OptimizerConfig& cfg);

} // namespace teleport
