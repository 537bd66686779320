#include <doctest.h>

#include "teleport/qutrit_example.hpp"

using namespace teleport;

TEST_CASE("family endpoints") {
  const ComplexMatrix phi = qutrit_phi().projector();
  CHECK((build_rho_f({0.0}).matrix() - phi).norm() < 1e-14);
  CHECK((build_rho_f({0.5}).matrix() - qutrit_rho_c().matrix()).norm() < 1e-14);
}

TEST_CASE("rho_c in the psi/phi basis") {
  const ComplexMatrix expected = 0.6 * qutrit_psi().projector() + 0.4 * qutrit_phi().projector();
  CHECK((qutrit_rho_c().matrix() - expected).norm() < 1e-14);
}

TEST_CASE("declared ensemble reconstructs the family") {
  for (double p : {0.0, 0.1, 0.25, 0.5}) {
    const QutritFamilyParams params{p};
    const PureDecomposition dec = declared_decomposition(params);
    CHECK(dec.reconstruction_error(build_rho_f(params)) < 1e-12);
    double total = 0.0;
    for (double w : dec.weights) total += w;
    CHECK(total == doctest::Approx(1.0));
    CHECK(max_schmidt_rank(dec) <= 3);
  }
}

TEST_CASE("closed form and its ingredients") {
  CHECK(family_fraction_minimum(0.0) == doctest::Approx(0.5));
  CHECK(e32_from_fraction(0.5) == doctest::Approx(std::sqrt(3.0) / 4.0).epsilon(1e-15));
  // The rank-2 relation maps the maximal fraction to the top of the band.
  CHECK(e32_from_fraction(1.0) == doctest::Approx(std::sqrt(3.0)));
  CHECK(e32_from_fraction(2.0 / 3.0) == doctest::Approx(std::sqrt(3.0) / 2.0));
}

TEST_CASE("parameter range") {
  CHECK_THROWS_AS(QutritFamilyParams{-0.1}.validate(), std::domain_error);
  CHECK_THROWS_AS(QutritFamilyParams{0.6}.validate(), std::domain_error);
}

TEST_CASE("report at p = 0 and p = 1/4") {
  OptimizerConfig cfg;
  cfg.restarts = 4;
  const QutritReport r0 = e_32_of_family({0.0}, cfg);
  CHECK(r0.closed_form == doctest::Approx(std::sqrt(3.0) / 4.0).epsilon(1e-12));
  // rho_f(0) is the pure state phi, whose E^(3,2) is sqrt(3)/2.
  CHECK(r0.declared_e_d2 == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));
  REQUIRE(r0.search);
  CHECK(*r0.search == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-9));
  CHECK(r0.singlet_fraction == doctest::Approx(2.0 / 3.0).epsilon(1e-9));

  const QutritReport r = e_32_of_family({0.25}, cfg);
  REQUIRE(r.search);
  CHECK(*r.search <= r.declared_e_d2 + 1e-12);
  CHECK(r.useful_by_fraction);
}
