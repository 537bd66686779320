#pragma once

#include <optional>
#include <string_view>
#include <utility>

#include "teleport/states.hpp"

namespace teleport {

/// Guard band around the f > 1/d usefulness threshold.
inline constexpr double kUsefulnessGuard = 1e-12;

enum class RankClass { rank2_useful, rank3_useful, not_useful, unclassified };

std::string_view to_string(RankClass c);

/// Everything known about a state's entanglement of teleportation. For mixed
/// states the optimized fields are one-sided bounds: singlet_fraction is a lower
/// bound, cren, e_d2 and e_d3 are upper bounds.
struct MeasureReport {
  int d = 0;
  double negativity = 0.0;
  double singlet_fraction = 0.0;
  double fidelity = 0.0;
  std::optional<double> cren;
  std::optional<double> e_d2;
  std::optional<double> e_d3;
  std::optional<double> concurrence;
  int schmidt_rank = 0;
  bool useful_for_teleportation = false;
  RankClass rank_class = RankClass::unclassified;
};

/// Optimal teleportation fidelity (d f + 1)/(d + 1).
double fidelity_from_fraction(double f, int d);

/// True when f exceeds the classical threshold 1/d by more than the guard band.
bool useful_for_teleportation(double f, int d);

/// (||rho^{T_A}||_1 - 1)/(d - 1).
double negativity_mixed(const DensityMatrix& rho);

double negativity_pure(const SchmidtSpectrum& s, int d);
double singlet_fraction_pure(const SchmidtSpectrum& s, int d);

/// |N - (d f - 1)/(d - 1)| with both sides evaluated from the Schmidt coefficients.
double negativity_fraction_relation_check(const SchmidtSpectrum& s, int d);

/// Pairwise Schmidt-product measure. Throws std::domain_error if more than three
/// coefficients exceed the spectrum's rank tolerance.
double e_d2(const SchmidtSpectrum& s, int d);

/// Triple Schmidt-product measure. Throws std::domain_error for d < 3 or rank > 3.
double e_d3(const SchmidtSpectrum& s, int d);

/// Residual of the identity tying E^(d,2)^2 to the singlet fraction and E^(d,3)
/// for spectra of rank <= 3. The E^(d,3) term vanishes identically for d = 2.
double central_identity_residual(const SchmidtSpectrum& s, int d);

struct Bounds {
  double lo;
  double hi;
};

/// Range (0, sqrt(d/(2(d-1)))] of E^(d,2) for useful Schmidt-rank-2 states.
Bounds rank2_bounds(int d);

/// Teleportation-fidelity floor implied by E^(d,3) for Schmidt-rank-3 pure states.
double rank3_fidelity_lower_bound(double e3, int d);

/// Upper end [d(d-1)/6]^{1/6} (d-2)^{-1/3} of the rank-3 entanglement band.
double rank3_mixed_bound(int d);

/// Wootters concurrence of a two-qubit density matrix.
double concurrence_2qubit(const DensityMatrix& rho);
/// Same, for a raw 4x4 hermitian matrix that has not been validated as a state
/// (used on integrator output whose positivity is tracked separately).
double concurrence_2qubit(const ComplexMatrix& rho);

MeasureReport analyze_pure(const PureBipartiteState& state, double rank_tol = kDefaultRankTolerance);

/// Band logic shared by pure and mixed classification. `e2` is the E^(d,2)
/// value (absent for out-of-scope states).
RankClass classify_band(bool useful, std::optional<double> e2, int d);

} // namespace teleport
