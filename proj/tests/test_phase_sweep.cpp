#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "oracles.hpp"
#include "sosggm/params.hpp"
#include "sosggm/phase_sweep.hpp"

using namespace sosggm;

TEST_CASE("classify_point reference values at k=2") {
  SUBCASE("tau=8: three symmetric values, two pairs, seven valid laws") {
    const PhaseRecord rec = classify_point(Params::from_tau(2, 8.0));
    CHECK(rec.n_symmetric_distinct == 3);
    CHECK(rec.n_asymmetric_pairs == 2);
    CHECK(rec.n_valid_laws == 7);
    CHECK(rec.tau_c == doctest::Approx(6.0).epsilon(1e-10));
    CHECK(rec.regime == Regime::above_critical);
    CHECK_FALSE(rec.paper_discrepancy);
    CHECK(rec.laws.size() == 7);
  }
  SUBCASE("tau=3: only the trivial law") {
    const PhaseRecord rec = classify_point(Params::from_tau(2, 3.0));
    CHECK(rec.n_symmetric_distinct == 1);
    CHECK(rec.n_asymmetric_pairs == 0);
    CHECK(rec.n_valid_laws == 1);
    CHECK(rec.regime == Regime::below_critical);
  }
  SUBCASE("tau=5: one asymmetric pair below the symmetric transition") {
    const PhaseRecord rec = classify_point(Params::from_tau(2, 5.0));
    CHECK(rec.n_symmetric_distinct == 1);
    CHECK(rec.n_asymmetric_pairs == 1);
    const auto want = oracle::asymmetric_pairs_k2(5.0);
    REQUIRE(want.size() == 1);
    bool found = false;
    for (const auto& law : rec.laws) {
      if (law.family == LawFamily::asymmetric &&
          std::abs(law.a - want[0].first) < 1e-9 &&
          std::abs(law.b - want[0].second) < 1e-9) {
        found = true;
      }
    }
    CHECK(found);
  }
  SUBCASE("tau=6: merged tangent root, flagged discrepancy") {
    const PhaseRecord rec = classify_point(Params::from_tau(2, 6.0));
    CHECK(rec.n_symmetric_distinct == 1);
    CHECK(rec.regime == Regime::critical);
    CHECK(rec.paper_discrepancy);
    REQUIRE_FALSE(rec.laws.empty());
    CHECK(rec.laws[0].family == LawFamily::trivial);
    CHECK(rec.laws[0].multiplicity == 3);
  }
}

TEST_CASE("sweep k=2 over [3,9]: one symmetric transition at tau_c") {
  const auto rows = sweep({2}, 3.0, 9.0, 7);
  REQUIRE(rows.size() == 7);
  int transitions = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].tau == doctest::Approx(3.0 + i).epsilon(1e-14));
    if (rows[i].tau < 6.0) {
      CHECK(rows[i].n_symmetric_distinct == 1);
      CHECK(rows[i].regime == Regime::below_critical);
    } else if (rows[i].tau > 6.0) {
      CHECK(rows[i].n_symmetric_distinct == 3);
      CHECK(rows[i].regime == Regime::above_critical);
    } else {
      CHECK(rows[i].n_symmetric_distinct == 1);
      CHECK(rows[i].regime == Regime::critical);
      CHECK(rows[i].paper_discrepancy);
    }
    if (i > 0 && rows[i].n_symmetric_distinct == 3 &&
        rows[i - 1].n_symmetric_distinct < 3) {
      ++transitions;
      CHECK(rows[i].tau == doctest::Approx(7.0).epsilon(1e-12));
    }
  }
  CHECK(transitions == 1);
}

TEST_CASE("symmetric count is non-decreasing in tau at fixed k") {
  for (const int k : {2, 3}) {
    const auto rows = sweep({k}, 2.5, 10.0, 13);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      CHECK(rows[i].n_symmetric_distinct >= rows[i - 1].n_symmetric_distinct);
    }
  }
}

TEST_CASE("sweep ordering is k-major and deterministic") {
  const auto rows = sweep({2, 3}, 3.0, 5.0, 3);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].k == 2);
  CHECK(rows[2].k == 2);
  CHECK(rows[3].k == 3);
  CHECK(rows[5].k == 3);
  for (int base : {0, 3}) {
    CHECK(rows[base].tau < rows[base + 1].tau);
    CHECK(rows[base + 1].tau < rows[base + 2].tau);
  }

  const auto again = sweep({2, 3}, 3.0, 5.0, 3);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].tau == again[i].tau);
    CHECK(rows[i].theta == again[i].theta);
    CHECK(rows[i].n_symmetric_distinct == again[i].n_symmetric_distinct);
    CHECK(rows[i].n_asymmetric_pairs == again[i].n_asymmetric_pairs);
    CHECK(rows[i].n_valid_laws == again[i].n_valid_laws);
    CHECK(rows[i].tau_c == again[i].tau_c);
  }
}

TEST_CASE("tauc_curve matches the closed form and decreases") {
  const auto rows = tauc_curve(2, 5);
  REQUIRE(rows.size() == 4);
  const double want[4] = {6.0, 4.0, 10.0 / 3.0, 3.0};
  for (int i = 0; i < 4; ++i) {
    CHECK(rows[i].first == i + 2);
    CHECK(std::abs(rows[i].second - want[i]) < 1e-9);
    if (i > 0) CHECK(rows[i].second < rows[i - 1].second);
  }
}

TEST_CASE("sweep and curve input validation") {
  CHECK_THROWS_AS(sweep({}, 3.0, 5.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(sweep({2}, 3.0, 5.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(sweep({2}, 2.0, 5.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(sweep({2}, 5.0, 3.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(sweep({1}, 3.0, 5.0, 3), std::invalid_argument);
  CHECK_THROWS_AS(tauc_curve(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(tauc_curve(5, 2), std::invalid_argument);
}
