#include <doctest.h>

#include <numbers>
#include <random>

#include "eelab/error.hpp"
#include "eelab/ga3.hpp"
#include "oracles.hpp"

using namespace eelab::ga3;
namespace B = eelab::ga3::basis;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("blade oracle sanity: anticommuting squares") {
  // Check the oracle itself on a few hand-derived products.
  CHECK(oracle::slot_product(1, 1) == std::pair{1, 0});   // e1 e1 = 1
  CHECK(oracle::slot_product(1, 2) == std::pair{1, 6});   // e1 e2 = e12
  CHECK(oracle::slot_product(2, 1) == std::pair{-1, 6});  // e2 e1 = -e12
  CHECK(oracle::slot_product(3, 1) == std::pair{1, 5});   // e3 e1 = e31
  CHECK(oracle::slot_product(7, 7) == std::pair{-1, 0});  // I I = -1
}

TEST_CASE("gp matches the parity-sort oracle on all 64 blade pairs") {
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      const auto a = oracle::basis_slot(i);
      const auto b = oracle::basis_slot(j);
      CAPTURE(i);
      CAPTURE(j);
      CHECK(gp(a, b) == oracle::gp(a, b));
    }
  }
}

TEST_CASE("gp examples") {
  SUBCASE("e1 e2 = I e3") {
    CHECK(gp(B::e1, B::e2) == B::e12);
    CHECK(gp(B::I, B::e3) == B::e12);
  }
  SUBCASE("identity") {
    std::mt19937_64 rng(1);
    const auto x = oracle::random_multivector(rng);
    CHECK(gp(x, B::one) == x);
    CHECK(gp(B::one, x) == x);
  }
  SUBCASE("pseudoscalar squares to -1") { CHECK(gp(B::I, B::I) == scalar(-1.0)); }
}

TEST_CASE("gp properties on random multivectors") {
  std::mt19937_64 rng(20261018);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = oracle::random_multivector(rng, 2.0);
    const auto b = oracle::random_multivector(rng, 2.0);
    const auto c = oracle::random_multivector(rng, 2.0);

    const auto lhs = gp(gp(a, b), c);
    const auto rhs = gp(a, gp(b, c));
    CHECK(oracle::max_abs_diff(lhs, rhs) <= 1e-10 * std::max(1.0, norm(lhs)));

    CHECK(oracle::max_abs_diff(gp(a, b + c), gp(a, b) + gp(a, c)) <= 1e-12 * 16);
    CHECK(oracle::max_abs_diff(gp(a, b), oracle::gp(a, b)) <= 1e-12 * 16);
    CHECK(oracle::max_abs_diff(gp(B::I, a), gp(a, B::I)) == 0.0);
    CHECK(oracle::max_abs_diff(reverse(gp(a, b)), gp(reverse(b), reverse(a))) <= 1e-12 * 16);
  }
}

TEST_CASE("grade projection") {
  CHECK(grade(B::e1 + B::e12, 1) == B::e1);
  CHECK(grade(gp(B::e1, B::e2), 2) == B::e12);

  std::mt19937_64 rng(7);
  const auto x = oracle::random_multivector(rng);
  CHECK(grade(x, 0) + grade(x, 1) + grade(x, 2) + grade(x, 3) == x);
  for (int g = 0; g <= 3; ++g) CHECK(off_grade_magnitude(grade(x, g), g) == 0.0);

  CHECK_THROWS_AS(grade(x, -1), eelab::DomainError);
  CHECK_THROWS_AS(grade(x, 4), eelab::DomainError);
}

TEST_CASE("reverse") {
  CHECK(reverse(B::e12) == -B::e12);
  CHECK(reverse(B::I) == -B::I);
  CHECK(reverse(B::e3) == B::e3);
  std::mt19937_64 rng(9);
  const auto x = oracle::random_multivector(rng);
  CHECK(reverse(reverse(x)) == x);
}

TEST_CASE("rotor construction and action") {
  SUBCASE("quarter turn in e1e2 takes e1 to e2") {
    const auto r = rotor(B::e12, kPi / 2);
    const Vec3 y = r.apply(Vec3{1, 0, 0});
    CHECK(std::abs(y.x) <= 1e-15);
    CHECK(y.y == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(y.z == 0.0);
  }
  SUBCASE("zero angle is the identity") {
    CHECK(rotor(B::e12, 0.0).as_multivector() == B::one);
  }
  SUBCASE("full turn is -1 but acts as identity on vectors") {
    const auto r = rotor(B::e12, 2 * kPi);
    CHECK(r.s() == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(std::abs(r.b12()) < 1e-15);
    const Vec3 v{0.3, -0.4, 0.5};
    const Vec3 w = r.apply(v);
    CHECK(norm(w - v) < 1e-15);
  }
  SUBCASE("bad planes are rejected") {
    CHECK_THROWS_AS(rotor(B::e12 * 2.0, 1.0), eelab::DomainError);
    CHECK_THROWS_AS(rotor(B::e12 + B::e1 * 0.1, 1.0), eelab::DomainError);
    CHECK_THROWS_AS(Rotor3::from_even(1.0, 0.1, 0.0, 0.0), eelab::DomainError);
  }
}

TEST_CASE("rotor double cover and norm preservation on random rotors") {
  std::mt19937_64 rng(31337);
  std::normal_distribution<double> n01;
  std::uniform_real_distribution<double> angle(-4 * kPi, 4 * kPi);
  for (int trial = 0; trial < 200; ++trial) {
    Multivector3 plane{0, 0, 0, 0, n01(rng), n01(rng), n01(rng), 0};
    plane = plane * (1.0 / norm(plane));
    const double theta = angle(rng);
    const auto r = rotor(plane, theta);
    const auto r2 = rotor(plane, theta + 2 * kPi);

    CHECK(oracle::max_abs_diff(r2.as_multivector(), -r.as_multivector()) <= 1e-12);
    CHECK(std::abs(norm(r.as_multivector()) - 1.0) <= 1e-12);

    const Vec3 v{n01(rng), n01(rng), n01(rng)};
    const Vec3 a = r.apply(v);
    const Vec3 b = r2.apply(v);
    CHECK(norm(a - b) <= 1e-12 * norm(v));
    CHECK(std::abs(norm(a) - norm(v)) <= 1e-12 * norm(v));
    // Sandwich of a vector stays a vector.
    CHECK(off_grade_magnitude(r.apply(to_multivector(v)), 1) <= 1e-12 * norm(v));
  }
}

TEST_CASE("rotor composition") {
  const auto a = rotor(B::e12, 0.3);
  const auto b = rotor(B::e23, -1.1);
  const Vec3 v{1, 2, 3};
  CHECK(norm((a * b).apply(v) - a.apply(b.apply(v))) < 1e-13);
  CHECK(norm(rotor(B::e12, 0.3).apply(rotor(B::e12, 0.4).apply(v)) - rotor(B::e12, 0.7).apply(v)) < 1e-13);
}
