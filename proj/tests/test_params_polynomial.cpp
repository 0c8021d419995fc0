#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "sosggm/params.hpp"
#include "sosggm/polynomial.hpp"

using sosggm::Params;
using sosggm::Polynomial;

TEST_CASE("params from theta derives tau") {
  const Params p = Params::from_theta(2, 0.5);
  CHECK(p.k == 2);
  CHECK(p.theta == 0.5);
  CHECK(p.tau == doctest::Approx(2.5).epsilon(1e-15));
}

TEST_CASE("params from tau picks the branch in (0,1)") {
  const Params p = Params::from_tau(2, 8.0);
  CHECK(p.theta == doctest::Approx(4.0 - std::sqrt(15.0)).epsilon(1e-15));
  CHECK(p.theta < 1.0);
  CHECK(p.tau == doctest::Approx(8.0).epsilon(1e-15));
}

TEST_CASE("params from coupling records provenance") {
  const Params p = Params::from_coupling(3, -0.5, 1.2);
  CHECK(p.theta == doctest::Approx(std::exp(-0.6)).epsilon(1e-15));
  REQUIRE(p.coupling_J.has_value());
  CHECK(*p.coupling_J == -0.5);
  CHECK(*p.inverse_temperature_beta == 1.2);
}

TEST_CASE("params validation") {
  CHECK_THROWS_AS(Params::from_theta(1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(Params::from_theta(2, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Params::from_theta(2, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Params::from_theta(2, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(Params::from_theta(2, -0.3), std::invalid_argument);
  CHECK_THROWS_AS(Params::from_tau(2, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(Params::from_tau(2, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(Params::from_tau(1, 8.0), std::invalid_argument);
}

TEST_CASE("polynomial evaluation matches naive horner on benign input") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> coef(-3.0, 3.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int deg = 1 + static_cast<int>(rng() % 8);
    Eigen::VectorXd c(deg + 1);
    for (int i = 0; i <= deg; ++i) c(i) = coef(rng);
    if (c(deg) == 0.0) c(deg) = 1.0;
    const Polynomial p(c);
    const double x = coef(rng);
    long double naive = 0.0L;
    for (int i = deg; i >= 0; --i) naive = naive * x + c(i);
    CHECK(p(x) ==
          doctest::Approx(static_cast<double>(naive)).epsilon(1e-12));
  }
}

TEST_CASE("compensated horner survives heavy cancellation") {
  // (x-1)^4 expanded; at x = 1 + 1e-4 the exact value is 1e-16 while the
  // intermediate terms are O(1).
  Eigen::VectorXd c(5);
  c << 1.0, -4.0, 6.0, -4.0, 1.0;
  const Polynomial p(c);
  CHECK(p(1.0001) == doctest::Approx(1e-16).epsilon(1e-9));
  CHECK(p(1.0) == 0.0);
}

TEST_CASE("eval_with_error brackets the value") {
  Eigen::VectorXd c(4);
  c << 2.0, -6.0, 0.5, 2.0;
  const Polynomial p(c);
  const auto ev = p.eval_with_error(1.7);
  CHECK(ev.error_bound > 0.0);
  long double naive = 0.0L;
  for (int i = 3; i >= 0; --i) naive = naive * 1.7L + c(i);
  CHECK(std::abs(ev.value - static_cast<double>(naive)) <= ev.error_bound);
}

TEST_CASE("derivative and monic") {
  Eigen::VectorXd c(4);
  c << 2.0, -6.0, 0.0, 2.0;
  const Polynomial p(c);
  const Polynomial d = p.derivative();
  REQUIRE(d.degree() == 2);
  CHECK(d.coefficients()(0) == -6.0);
  CHECK(d.coefficients()(1) == 0.0);
  CHECK(d.coefficients()(2) == 6.0);

  const Polynomial m = p.monic();
  CHECK(m.coefficients()(3) == 1.0);
  CHECK(m.coefficients()(0) == 1.0);

  const Polynomial constant{Eigen::VectorXd::Constant(1, 5.0)};
  CHECK(constant.derivative().degree() == 0);
  CHECK(constant.derivative()(3.0) == 0.0);
}

TEST_CASE("polynomial rejects empty and zero leading coefficient") {
  const Eigen::VectorXd empty(0);
  CHECK_THROWS_AS(Polynomial{empty}, std::invalid_argument);
  Eigen::VectorXd c(3);
  c << 1.0, 2.0, 0.0;
  CHECK_THROWS_AS(Polynomial{c}, std::invalid_argument);
}
