#include <doctest.h>

#include <cmath>

#include "eelab/error.hpp"
#include "eelab/uncertainty.hpp"

using namespace eelab::uncertainty;

namespace {
constexpr double kMe = 9.10938370e-31;
constexpr double kHbar = 1.05457182e-34;
constexpr double kEv = 1.60217663e-19;
}  // namespace

TEST_CASE("momentum uncertainty") {
  // sqrt(2 * 9.109e-31 * 0.08 * 1.602e-19) by hand.
  CHECK(momentum_uncertainty(0.080, kMe) == doctest::Approx(1.5282e-25).epsilon(1e-4));
  CHECK(momentum_uncertainty(0.320, kMe) == doctest::Approx(2 * momentum_uncertainty(0.080, kMe)).epsilon(1e-15));
  CHECK(momentum_uncertainty(1000.0, kMe) == doctest::Approx(1.7085e-23).epsilon(1e-4));
  CHECK_THROWS_AS(momentum_uncertainty(0.0, kMe), eelab::DomainError);
  CHECK_THROWS_AS(momentum_uncertainty(-1.0, kMe), eelab::DomainError);
}

TEST_CASE("position uncertainty") {
  const double dp = momentum_uncertainty(0.080, kMe);
  const double dx = position_uncertainty(dp, 0.5);
  CHECK(dx == doctest::Approx(0.5 * kHbar / std::sqrt(2 * kMe * 0.080 * kEv) * 1e12).epsilon(1e-12));
  CHECK(dx == doctest::Approx(345.05).epsilon(1e-4));
  CHECK(std::abs(dx - 350.0) <= 35.0);
  CHECK(position_uncertainty(dp, 1.0) == doctest::Approx(2 * dx).epsilon(1e-15));
  CHECK(position_uncertainty(1e300, 0.5) < 1e-200);
  CHECK_THROWS_AS(position_uncertainty(0.0, 0.5), eelab::DomainError);

  double prev = 1e300;
  for (double e = 1e-3; e < 1e6; e *= 1.7) {
    const double x = position_uncertainty(momentum_uncertainty(e, kMe), 0.5);
    CHECK(x < prev);
    prev = x;
  }
}

TEST_CASE("relative feature error") {
  CHECK(relative_feature_error(30.0, 0.1) == doctest::Approx(1.0 / 300.0).epsilon(1e-15));
  CHECK(relative_feature_error(2.0, 2.0) == 1.0);
  CHECK(relative_feature_error(30.0, 0.05) == doctest::Approx(0.0016667).epsilon(1e-4));
  CHECK_THROWS_AS(relative_feature_error(0.0, 0.1), eelab::DomainError);
}

TEST_CASE("compliance energy") {
  CHECK(compliance_energy(20.0, kMe, 1.0) == doctest::Approx(95.24).epsilon(1e-3));
  CHECK(compliance_energy(20.0, kMe, 0.5) == doctest::Approx(23.81).epsilon(1e-3));
  CHECK(compliance_energy(10.0, kMe, 1.0) == doctest::Approx(4 * compliance_energy(20.0, kMe, 1.0)).epsilon(1e-14));
  for (double e : {1e-3, 0.08, 1.0, 1000.0, 1e6}) {
    for (double f : {0.5, 1.0}) {
      const double dx = position_uncertainty(momentum_uncertainty(e, kMe), f);
      CHECK(compliance_energy(dx, kMe, f) == doctest::Approx(e).epsilon(1e-9));
    }
  }
  double prev = 1e300;
  for (double x = 1.0; x < 1e4; x *= 1.3) {
    const double e = compliance_energy(x, kMe, 0.5);
    CHECK(e < prev);
    prev = e;
  }
  CHECK_THROWS_AS(compliance_energy(0.0, kMe, 0.5), eelab::DomainError);
}

TEST_CASE("round trips") {
  for (double dp : {1e-26, 1.5e-25, 3e-22}) {
    const double dx_m = position_uncertainty(dp, 0.5) * kPicometre;
    CHECK(0.5 * codata::hbar / dx_m == doctest::Approx(dp).epsilon(1e-12));
    const double e = dp * dp / (2 * kMe) / kEv;
    CHECK(momentum_uncertainty(e, kMe) == doctest::Approx(dp).epsilon(1e-12));
  }
}

TEST_CASE("budget report") {
  const auto b = budget_report({});
  CHECK(b.band_energy_ev == doctest::Approx(0.080));
  CHECK(b.dx_pm == doctest::Approx(345.05).epsilon(1e-4));
  CHECK(b.contradiction);
  CHECK(b.relative_error == doctest::Approx(1.0 / 300));
  CHECK(b.convention_factor == 0.5);
  CHECK(b.compliance_energy_ev == doctest::Approx(23.81).epsilon(1e-3));

  BudgetInputs hot;
  hot.band_energy_mev = 1e9;  // 1 MeV
  CHECK_FALSE(budget_report(hot).contradiction);

  BudgetInputs edge;
  edge.lateral_resolution_pm = budget_report(edge).dx_pm;
  CHECK_FALSE(budget_report(edge).contradiction);

  BudgetInputs bad;
  bad.feature_height_pm = 0.0;
  CHECK_THROWS_AS(budget_report(bad), eelab::DomainError);
}
