#pragma once

#include <optional>

#include "teleport/mixed.hpp"

namespace teleport {

/// Mixing probability of the two-qutrit family, 0 <= p <= 1/2.
struct QutritFamilyParams {
  double p = 0.0;
  void validate() const;
};

/// (1/sqrt3)(|00> + |11> - e^{i pi/3}|22>)
PureBipartiteState qutrit_psi();
/// (1/sqrt2)(|00> + |11>)
PureBipartiteState qutrit_phi();

/// rho_c = (|chi0><chi0| + |chi1><chi1|)/2 with chi_{0,1} = sqrt(3/5) psi +- sqrt(2/5) phi.
DensityMatrix qutrit_rho_c();

/// rho_f = 5p/(p+2) rho_c + 2(1-2p)/(p+2) |phi><phi|.
DensityMatrix build_rho_f(const QutritFamilyParams& params);

/// The ensemble {chi0, chi1, phi} the family is written in, zero-weight members dropped.
PureDecomposition declared_decomposition(const QutritFamilyParams& params);

/// (1+p)/(2+p): the family's stated minimum of sum_i p_i f(rho_i).
double family_fraction_minimum(double p);

/// (3 sqrt3 / 2) m - sqrt3 / 2, the d = 3 rank-2 relation E = sqrt(d^3/(2(d-1))) (m - 1/d).
double e32_from_fraction(double m);

struct QutritReport {
  double p = 0.0;
  /// e32_from_fraction(family_fraction_minimum(p)); sqrt(3)/4 at p = 0.
  double closed_form = 0.0;
  /// sum_i p_i f(rho_i) over the declared ensemble, f from Schmidt coefficients.
  double declared_fraction_average = 0.0;
  /// e32_from_fraction(declared_fraction_average).
  double declared_value = 0.0;
  /// sum_i p_i E^(3,2)(rho_i) over the declared ensemble.
  double declared_e_d2 = 0.0;
  /// Convex-roof search seeded with the declared ensemble (upper bound).
  std::optional<double> search;
  /// Lower bound on the singlet fraction of rho_f.
  double singlet_fraction = 0.0;
  /// closed_form lies in the useful rank-2 band (0, sqrt(3/4)].
  bool useful_by_band = false;
  bool useful_by_fraction = false;
};

QutritReport e_32_of_family(const QutritFamilyParams& params, const OptimizerConfig& cfg);

} // namespace teleport
