#include "teleport/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace teleport {

namespace {

constexpr double kRoundoffFloor = 1e-10;

void require_dimension(int d, int min_d, const char* what) {
  if (d < min_d)
    throw std::domain_error(std::string(what) + ": requires d >= " + std::to_string(min_d) +
                            ", got " + std::to_string(d));
}

// Clamp subtractive round-off just below zero; genuine negatives pass through.
double floor_roundoff(double x) { return (x < 0.0 && x > -kRoundoffFloor) ? 0.0 : x; }

void require_rank_at_most_three(const SchmidtSpectrum& s, const char* what) {
  if (s.rank() > 3)
    throw std::domain_error(std::string(what) + ": defined for at most three Schmidt coefficients, got rank " +
                            std::to_string(s.rank()));
}

} // namespace

std::string_view to_string(RankClass c) {
  switch (c) {
  case RankClass::rank2_useful: return "rank2_useful";
  case RankClass::rank3_useful: return "rank3_useful";
  case RankClass::not_useful: return "not_useful";
  case RankClass::unclassified: return "unclassified";
  }
  return "unclassified";
}

double fidelity_from_fraction(double f, int d) {
  require_dimension(d, 2, "fidelity_from_fraction");
  if (!(f >= -1e-12 && f <= 1.0 + 1e-12))
    throw std::domain_error("fidelity_from_fraction: singlet fraction outside [0,1]");
  return (d * f + 1.0) / (d + 1.0);
}

bool useful_for_teleportation(double f, int d) { return f > 1.0 / d + kUsefulnessGuard; }

double negativity_mixed(const DensityMatrix& rho) {
  const int d = rho.dim();
  const double norm = trace_norm(partial_transpose(rho.matrix(), d, Subsystem::A));
  return std::max(0.0, floor_roundoff((norm - 1.0) / (d - 1.0)));
}

double negativity_pure(const SchmidtSpectrum& s, int d) {
  require_dimension(d, 2, "negativity_pure");
  double pairs = 0.0;
  const auto& l = s.lambdas();
  for (std::size_t i = 0; i < l.size(); ++i)
    for (std::size_t j = i + 1; j < l.size(); ++j) pairs += std::sqrt(l[i] * l[j]);
  return 2.0 * pairs / (d - 1.0);
}

double singlet_fraction_pure(const SchmidtSpectrum& s, int d) {
  require_dimension(d, 2, "singlet_fraction_pure");
  double root_sum = 0.0;
  for (double l : s.lambdas()) root_sum += std::sqrt(l);
  return root_sum * root_sum / d;
}

double negativity_fraction_relation_check(const SchmidtSpectrum& s, int d) {
  const double n = negativity_pure(s, d);
  const double f = singlet_fraction_pure(s, d);
  return std::abs(n - (d * f - 1.0) / (d - 1.0));
}

double e_d2(const SchmidtSpectrum& s, int d) {
  require_dimension(d, 2, "e_d2");
  require_rank_at_most_three(s, "e_d2");
  const double pairs = s[0] * s[1] + s[1] * s[2] + s[0] * s[2];
  return std::sqrt(std::max(0.0, 2.0 * d / (d - 1.0) * pairs));
}

double e_d3(const SchmidtSpectrum& s, int d) {
  require_dimension(d, 3, "e_d3");
  require_rank_at_most_three(s, "e_d3");
  if (s.rank() < 3) return 0.0;
  const double scale = 6.0 * d * d / ((d - 1.0) * (d - 2.0));
  return std::cbrt(scale * s[0] * s[1] * s[2]);
}

double central_identity_residual(const SchmidtSpectrum& s, int d) {
  require_rank_at_most_three(s, "central_identity_residual");
  const double e2 = e_d2(s, d);
  const double f = singlet_fraction_pure(s, d);
  const double excess = f - 1.0 / d;
  double rhs = d * d * d / (2.0 * (d - 1.0)) * excess * excess;
  if (d >= 3) {
    const double e3 = e_d3(s, d);
    rhs -= 4.0 / (d - 1.0) * std::sqrt(d * (d - 1.0) * (d - 2.0) / 6.0) * std::pow(e3, 1.5) * std::sqrt(f);
  }
  return std::abs(e2 * e2 - rhs);
}

Bounds rank2_bounds(int d) {
  require_dimension(d, 2, "rank2_bounds");
  return {0.0, std::sqrt(d / (2.0 * (d - 1.0)))};
}

double rank3_fidelity_lower_bound(double e3, int d) {
  require_dimension(d, 3, "rank3_fidelity_lower_bound");
  if (e3 < 0.0) throw std::domain_error("rank3_fidelity_lower_bound: negative E^(d,3)");
  const double scale = std::cbrt((d - 1.0) * (d - 2.0) / (6.0 * d * d));
  return 2.0 / (d + 1.0) + 6.0 / (d + 1.0) * scale * e3;
}

double rank3_mixed_bound(int d) {
  require_dimension(d, 3, "rank3_mixed_bound");
  return std::pow(d * (d - 1.0) / 6.0, 1.0 / 6.0) / std::cbrt(d - 2.0);
}

double concurrence_2qubit(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw std::domain_error("concurrence_2qubit: requires d = 2");
  return concurrence_2qubit(rho.matrix());
}

double concurrence_2qubit(const ComplexMatrix& rho) {
  if (rho.rows() != 4 || rho.cols() != 4) throw std::domain_error("concurrence_2qubit: requires a 4x4 matrix");
  ComplexMatrix yy = ComplexMatrix::Zero(4, 4);
  yy(0, 3) = -1.0;
  yy(1, 2) = 1.0;
  yy(2, 1) = 1.0;
  yy(3, 0) = -1.0;
  const ComplexMatrix flipped = yy * rho.conjugate() * yy;

  // Same spectrum as rho * flipped, but hermitian: sqrt(rho) flipped sqrt(rho).
  const auto eig = herm_eig(rho);
  const RealVector roots = eig.eigenvalues.cwiseMax(0.0).cwiseSqrt();
  const ComplexMatrix sqrt_rho = eig.eigenvectors * roots.cast<Complex>().asDiagonal() * eig.eigenvectors.adjoint();
  ComplexMatrix r = sqrt_rho * flipped * sqrt_rho;
  r = 0.5 * (r + r.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(r, Eigen::EigenvaluesOnly);
  const RealVector mu = es.eigenvalues(); // ascending
  // Eigenvalues at rounding level of the largest would add O(sqrt(eps)) noise through the square roots.
  const double floor = 1e-13 * std::max(mu(3), 0.0);
  const auto root = [&](int k) { return mu(k) > floor ? std::sqrt(mu(k)) : 0.0; };
  return std::max(0.0, root(3) - root(2) - root(1) - root(0));
}

RankClass classify_band(bool useful, std::optional<double> e2, int d) {
  if (!useful) return RankClass::not_useful;
  if (!e2 || !(*e2 > 0.0)) return RankClass::unclassified;
  // Pure Schmidt-rank-2 states reach the rank-2 ceiling exactly, so the edge is inclusive.
  constexpr double edge = 1e-9;
  const double hi2 = rank2_bounds(d).hi;
  if (*e2 <= hi2 + edge) return RankClass::rank2_useful;
  if (d >= 3 && *e2 < rank3_mixed_bound(d)) return RankClass::rank3_useful;
  return RankClass::unclassified;
}

MeasureReport analyze_pure(const PureBipartiteState& state, double rank_tol) {
  const int d = state.dim();
  const SchmidtSpectrum s = schmidt(state, rank_tol);
  MeasureReport r;
  r.d = d;
  r.negativity = negativity_pure(s, d);
  r.singlet_fraction = std::min(1.0, singlet_fraction_pure(s, d));
  r.fidelity = fidelity_from_fraction(r.singlet_fraction, d);
  r.cren = r.negativity;
  r.schmidt_rank = s.rank();
  r.useful_for_teleportation = useful_for_teleportation(r.singlet_fraction, d);
  if (d == 2) r.concurrence = e_d2(s, d);
  if (r.schmidt_rank <= 3) {
    r.e_d2 = e_d2(s, d);
    if (d >= 3) r.e_d3 = e_d3(s, d);
  }
  if (!r.useful_for_teleportation)
    r.rank_class = RankClass::not_useful;
  else if (r.schmidt_rank == 2)
    r.rank_class = RankClass::rank2_useful;
  else if (r.schmidt_rank == 3)
    r.rank_class = RankClass::rank3_useful;
  else
    r.rank_class = RankClass::unclassified;
  return r;
}

} // namespace teleport
