#include <doctest.h>

#include "oracles.hpp"
#include "teleport/mixed.hpp"
#include "teleport/random.hpp"

using namespace teleport;

TEST_CASE("two-qubit FEF closed form on Werner states") {
  for (double p : {0.0, 0.3, 0.8, 1.0}) {
    const DensityMatrix w = isotropic_state(2, p);
    CHECK(fef_2qubit_closed_form(w) == doctest::Approx((1.0 + 3.0 * p) / 4.0).epsilon(1e-12));
  }
}

TEST_CASE("FEF maximizer attains the closed form") {
  Rng rng(40);
  for (int i = 0; i < 20; ++i) {
    const DensityMatrix rho = random_density_matrix(2, rng);
    const ComplexMatrix u = fef_2qubit_maximizer(rho);
    CHECK((u.adjoint() * u - ComplexMatrix::Identity(2, 2)).norm() < 1e-10);
    CHECK(singlet_fraction_at(rho, u) == doctest::Approx(fef_2qubit_closed_form(rho)).epsilon(1e-12));
  }
}

TEST_CASE("FEF closed form bounds every sampled unitary") {
  Rng rng(41);
  const DensityMatrix rho = random_density_matrix(2, rng);
  const double top = fef_2qubit_closed_form(rho);
  for (int i = 0; i < 500; ++i) CHECK(singlet_fraction_at(rho, haar_unitary(2, rng)) <= top + 1e-12);
}

TEST_CASE("isotropic qutrit singlet fraction by search") {
  OptimizerConfig cfg;
  cfg.restarts = 4;
  for (double p : {0.2, 0.7}) {
    const DensityMatrix iso = isotropic_state(3, p);
    CHECK(singlet_fraction_mixed(iso, cfg).value == doctest::Approx(p + (1.0 - p) / 9.0).epsilon(1e-9));
  }
}

TEST_CASE("convex roofs are upper bounds and reach pure-state values") {
  OptimizerConfig cfg;
  cfg.restarts = 4;
  Rng rng(42);
  const PureBipartiteState psi = random_pure_state(2, rng);
  const DensityMatrix pure = DensityMatrix::from_pure(psi);
  CHECK(cren_estimate(pure, cfg).value == doctest::Approx(negativity_pure(schmidt(psi), 2)).epsilon(1e-10));

  cfg.record_evaluations = true;
  for (int i = 0; i < 5; ++i) {
    const DensityMatrix rho = random_density_matrix(2, rng, 2);
    const double c = oracle::concurrence(rho.matrix());
    const OptResult r = cren_estimate(rho, cfg);
    for (double v : r.evaluations) CHECK(v >= c - 1e-9);
    CHECK(r.value == doctest::Approx(c).epsilon(1e-4));
    CHECK(r.value >= negativity_mixed(rho) - 1e-9);
  }
}

TEST_CASE("roof objective is the ensemble average") {
  Rng rng(43);
  const DensityMatrix rho = random_density_matrix(3, rng, 2);
  const ComplexMatrix mix = haar_isometry(4, 2, rng);
  const PureDecomposition dec = hjw_decomposition(rho, mix);
  double average = 0.0;
  for (std::size_t i = 0; i < dec.size(); ++i) average += dec.weights[i] * negativity_pure(schmidt(dec.states[i]), 3);
  CHECK(*roof_objective(rho, mix, RoofMeasure::negativity) == doctest::Approx(average).epsilon(1e-10));
  CHECK(cren_upper_bound(rho, dec) == doctest::Approx(average).epsilon(1e-10));
}

TEST_CASE("rank-limited roofs reject wide members") {
  Rng rng(44);
  const DensityMatrix rho = random_density_matrix(4, rng, 2);
  // Generic rank-2 states in 4x4 have Schmidt-rank-4 eigenvectors.
  CHECK_FALSE(roof_objective(rho, ComplexMatrix::Identity(2, 2), RoofMeasure::e_d2).has_value());
  CHECK_THROWS_AS(e_d3_mixed(isotropic_state(2, 0.5), OptimizerConfig{}), std::domain_error);
}

TEST_CASE("classify_mixed on Werner p = 0.8") {
  OptimizerConfig cfg;
  cfg.restarts = 4;
  const MeasureReport r = classify_mixed(isotropic_state(2, 0.8), cfg);
  CHECK(r.singlet_fraction == doctest::Approx(0.85).epsilon(1e-12));
  CHECK(*r.concurrence == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(*r.cren == doctest::Approx(0.7).epsilon(1e-6));
  CHECK(r.useful_for_teleportation);
  CHECK(r.rank_class == RankClass::rank2_useful);

  const MeasureReport mixed = classify_mixed(DensityMatrix::maximally_mixed(3), cfg);
  // <psi|I/9|psi> = 1/9 for every maximally entangled psi; the fidelity is 1/3.
  CHECK(mixed.singlet_fraction == doctest::Approx(1.0 / 9.0).epsilon(1e-12));
  CHECK(mixed.fidelity == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(mixed.rank_class == RankClass::not_useful);
}

TEST_CASE("average fidelity of a decomposition") {
  PureDecomposition dec;
  dec.weights = {0.5, 0.5};
  dec.states = {maximally_entangled(2), state_from_spectrum({1.0, 0.0}, 2)};
  CHECK(average_fidelity(dec) == doctest::Approx(0.5 * 1.0 + 0.5 * (2.0 / 3.0)));
}
