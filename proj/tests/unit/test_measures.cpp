#include <doctest.h>

#include "oracles.hpp"
#include "teleport/measures.hpp"
#include "teleport/random.hpp"

using namespace teleport;

TEST_CASE("Werner state closed forms") {
  for (double p : {0.0, 0.2, 1.0 / 3.0, 0.5, 0.8, 1.0}) {
    const DensityMatrix w = isotropic_state(2, p);
    const double expected = std::max(0.0, (3.0 * p - 1.0) / 2.0);
    CHECK(negativity_mixed(w) == doctest::Approx(expected).epsilon(1e-12));
    CHECK(concurrence_2qubit(w) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("isotropic negativity in higher dimensions") {
  for (int d = 3; d <= 4; ++d)
    for (double p : {0.1, 0.5, 0.9}) {
      const DensityMatrix iso = isotropic_state(d, p);
      const double oracle_n = (oracle::trace_norm(oracle::partial_transpose_a(iso.matrix(), d)) - 1.0) / (d - 1.0);
      CHECK(negativity_mixed(iso) == doctest::Approx(std::max(0.0, oracle_n)).epsilon(1e-12));
    }
}

TEST_CASE("concurrence matches the non-hermitian Wootters route") {
  Rng rng(20);
  for (int i = 0; i < 200; ++i) {
    const DensityMatrix rho = random_density_matrix(2, rng, 1 + i % 4);
    CHECK(concurrence_2qubit(rho) == doctest::Approx(oracle::concurrence(rho.matrix())).epsilon(1e-7));
  }
}

TEST_CASE("pure-state measures agree with the mixed-state routes") {
  Rng rng(21);
  for (int d = 2; d <= 5; ++d)
    for (int i = 0; i < 20; ++i) {
      const PureBipartiteState psi = random_pure_state(d, rng);
      const SchmidtSpectrum s = schmidt(psi);
      const DensityMatrix proj = DensityMatrix::from_pure(psi);
      CHECK(negativity_pure(s, d) == doctest::Approx(negativity_mixed(proj)).epsilon(1e-10));
      CHECK(negativity_fraction_relation_check(s, d) < 1e-12);
      if (d == 2) CHECK(e_d2(s, 2) == doctest::Approx(concurrence_2qubit(proj)).epsilon(1e-10));
    }
}

TEST_CASE("E2 and E3 on reference spectra") {
  const SchmidtSpectrum flat({1.0 / 3, 1.0 / 3, 1.0 / 3});
  CHECK(e_d2(flat, 3) == doctest::Approx(1.0));
  CHECK(e_d3(flat, 3) == doctest::Approx(1.0));
  const SchmidtSpectrum two({0.5, 0.5, 0.0});
  CHECK(e_d2(two, 3) == doctest::Approx(std::sqrt(0.75)));
  CHECK(e_d3(two, 3) == 0.0);
  CHECK_THROWS_AS(e_d3(two, 2), std::domain_error);
  CHECK_THROWS_AS(e_d2(SchmidtSpectrum({0.25, 0.25, 0.25, 0.25}), 4), std::domain_error);
  CHECK(central_identity_residual(two, 3) < 1e-12);
  CHECK(central_identity_residual(SchmidtSpectrum({0.7, 0.3}), 2) < 1e-12);
}

TEST_CASE("bounds") {
  CHECK(rank2_bounds(2).hi == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rank2_bounds(3).hi == doctest::Approx(std::sqrt(0.75)).epsilon(1e-15));
  CHECK(rank3_mixed_bound(3) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(rank3_mixed_bound(4) - std::pow(2.0, -1.0 / 6.0)) < 1e-15);
  CHECK_THROWS(rank2_bounds(1));
  CHECK_THROWS(rank3_mixed_bound(2));
  CHECK(rank3_fidelity_lower_bound(0.0, 3) == doctest::Approx(0.5));
  // The flat rank-3 state saturates the floor at F = 1.
  CHECK(rank3_fidelity_lower_bound(1.0, 3) == doctest::Approx(1.0));
}

TEST_CASE("fidelity and usefulness thresholds") {
  CHECK(fidelity_from_fraction(1.0 / 3.0, 3) == doctest::Approx(0.5));
  CHECK_FALSE(useful_for_teleportation(1.0 / 3.0, 3));
  CHECK(useful_for_teleportation(1.0 / 3.0 + 1e-9, 3));
  CHECK_THROWS(fidelity_from_fraction(1.5, 2));
}

TEST_CASE("band classification") {
  CHECK(classify_band(false, 0.5, 3) == RankClass::not_useful);
  CHECK(classify_band(true, std::nullopt, 3) == RankClass::unclassified);
  CHECK(classify_band(true, std::sqrt(0.75), 3) == RankClass::rank2_useful);
  CHECK(classify_band(true, 0.95, 3) == RankClass::rank3_useful);
  CHECK(classify_band(true, 1.2, 3) == RankClass::unclassified);
  CHECK(to_string(RankClass::rank3_useful) == "rank3_useful");
}

TEST_CASE("analyze_pure examples") {
  const MeasureReport max3 = analyze_pure(maximally_entangled(3));
  CHECK(max3.singlet_fraction == doctest::Approx(1.0));
  CHECK(max3.fidelity == doctest::Approx(1.0));
  CHECK(max3.rank_class == RankClass::rank3_useful);

  const MeasureReport product = analyze_pure(state_from_spectrum({1.0, 0.0, 0.0}, 3));
  CHECK(product.rank_class == RankClass::not_useful);
  CHECK(product.negativity == doctest::Approx(0.0));

  const MeasureReport rank2 = analyze_pure(state_from_spectrum({0.6, 0.4, 0.0}, 3));
  CHECK(rank2.rank_class == RankClass::rank2_useful);
  CHECK(*rank2.e_d3 == 0.0);

  const MeasureReport four = analyze_pure(maximally_entangled(4));
  CHECK_FALSE(four.e_d2.has_value());
  CHECK(four.rank_class == RankClass::unclassified);
}
