#include "teleport/qutrit_example.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace teleport {

void QutritFamilyParams::validate() const {
  if (!(p >= 0.0 && p <= 0.5)) throw std::domain_error("qutrit family: p must lie in [0, 1/2]");
}

namespace {

ComplexVector diagonal_ket(Complex a, Complex b, Complex c) {
  ComplexVector v = ComplexVector::Zero(9);
  v(0) = a; // |00>
  v(4) = b; // |11>
  v(8) = c; // |22>
  return v;
}

// Unnormalized chi_0 (sign = +1) or chi_1 (sign = -1).
ComplexVector chi(double sign) {
  return std::sqrt(3.0 / 5.0) * qutrit_psi().vector() + sign * std::sqrt(2.0 / 5.0) * qutrit_phi().vector();
}

struct FamilyWeights {
  double rho_c;
  double phi;
};

FamilyWeights weights(double p) { return {5.0 * p / (p + 2.0), 2.0 * (1.0 - 2.0 * p) / (p + 2.0)}; }

} // namespace

PureBipartiteState qutrit_psi() {
  const Complex phase = std::polar(1.0, std::numbers::pi / 3.0);
  return PureBipartiteState::from_vector(diagonal_ket(1.0, 1.0, -phase) / std::sqrt(3.0), 3);
}

PureBipartiteState qutrit_phi() {
  return PureBipartiteState::from_vector(diagonal_ket(1.0, 1.0, 0.0) / std::sqrt(2.0), 3);
}

DensityMatrix qutrit_rho_c() {
  const ComplexVector c0 = chi(1.0);
  const ComplexVector c1 = chi(-1.0);
  return DensityMatrix(0.5 * (c0 * c0.adjoint() + c1 * c1.adjoint()), 3);
}

DensityMatrix build_rho_f(const QutritFamilyParams& params) {
  params.validate();
  const auto w = weights(params.p);
  return DensityMatrix(w.rho_c * qutrit_rho_c().matrix() + w.phi * qutrit_phi().projector(), 3);
}

PureDecomposition declared_decomposition(const QutritFamilyParams& params) {
  params.validate();
  const auto w = weights(params.p);
  PureDecomposition out;
  for (const double sign : {1.0, -1.0}) {
    const ComplexVector c = chi(sign);
    const double weight = w.rho_c * 0.5 * c.squaredNorm();
    if (weight <= 0.0) continue;
    out.weights.push_back(weight);
    out.states.push_back(PureBipartiteState::from_vector(c / c.norm(), 3));
  }
  if (w.phi > 0.0) {
    out.weights.push_back(w.phi);
    out.states.push_back(qutrit_phi());
  }
  return out;
}

double family_fraction_minimum(double p) { return (1.0 + p) / (2.0 + p); }

double e32_from_fraction(double m) { return 1.5 * std::sqrt(3.0) * m - 0.5 * std::sqrt(3.0); }

QutritReport e_32_of_family(const QutritFamilyParams& params, const OptimizerConfig& cfg) {
  params.validate();
  const DensityMatrix rho = build_rho_f(params);
  const PureDecomposition decomp = declared_decomposition(params);

  QutritReport r;
  r.p = params.p;
  r.closed_form = e32_from_fraction(family_fraction_minimum(params.p));
  for (std::size_t i = 0; i < decomp.size(); ++i) {
    const auto s = schmidt(decomp.states[i]);
    r.declared_fraction_average += decomp.weights[i] * singlet_fraction_pure(s, 3);
    r.declared_e_d2 += decomp.weights[i] * e_d2(s, 3);
  }
  r.declared_value = e32_from_fraction(r.declared_fraction_average);

  RoofSearchOptions opts;
  opts.seed_mix = mixing_isometry(rho, decomp);
  if (const auto found = e_d2_mixed(rho, cfg, opts)) r.search = found->value;

  r.singlet_fraction = singlet_fraction_mixed(rho, cfg).value;
  r.useful_by_band = r.closed_form > 0.0 && r.closed_form <= rank2_bounds(3).hi + 1e-12;
  r.useful_by_fraction = useful_for_teleportation(r.singlet_fraction, 3);
  return r;
}

} // namespace teleport
