#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "eelab/error.hpp"
#include "eelab/spin_dynamics.hpp"
#include "oracles.hpp"

using namespace eelab::spin;
using eelab::ga3::Vec3;
using eelab::ga3::cross;
using eelab::ga3::dot;
using eelab::ga3::norm;
using eelab::ga3::normalized;

namespace {

constexpr double kPi = std::numbers::pi;

// For a ramp along a fixed direction the flow is a rotation about
// u x b_dir by -kappa |u x b_dir| B(t).
Vec3 exact(const Vec3& e0, const Vec3& u, const Vec3& b_dir, double kappa, double field) {
  const Vec3 w = cross(u, b_dir);
  const double wn = norm(w);
  if (wn == 0.0) return e0;
  return oracle::rodrigues(e0, w / wn, -kappa * wn * field);
}

Vec3 final_e(const std::vector<TrajectoryPoint>& tr) { return tr.back().state.e_s; }

}  // namespace

TEST_CASE("ll_rhs examples") {
  const LLParams p{2.0, {0, 0, 3.0}, 1e-3};
  const SpinState s{{0, 0, 1}, 1.0};
  CHECK(ll_rhs(s, p, {0, 0, 0}) == Vec3{0, 0, 0});
  CHECK(norm(ll_rhs({{1, 0, 0}, 1.0}, p, {0, 0, 5.0})) == 0.0);
  // e3 x (3 e3 x 0.5 e1) = 1.5 e3 x e2 = -1.5 e1, times kappa.
  const Vec3 r = ll_rhs(s, p, {0.5, 0, 0});
  CHECK(r.x == doctest::Approx(-2.0 * 3.0 * 0.5));
  CHECK(r.y == 0.0);
  CHECK(r.z == 0.0);

  std::mt19937_64 rng(3);
  std::normal_distribution<double> n01;
  for (int i = 0; i < 200; ++i) {
    const SpinState si{normalized({n01(rng), n01(rng), n01(rng)}), 1.0};
    const LLParams pi{n01(rng), {n01(rng), n01(rng), n01(rng)}, 1e-3};
    const Vec3 v = ll_rhs(si, pi, {n01(rng), n01(rng), n01(rng)});
    CHECK(std::abs(dot(v, si.e_s)) <= 1e-12 * std::max(1.0, norm(v)));
  }
}

TEST_CASE("ramps") {
  const auto lin = FieldRamp::linear({1, 0, 0}, 2.0, 4.0);
  CHECK(lin.b_rate(0.0) == Vec3{0.5, 0, 0});
  CHECK(lin.b_rate(3.0) == Vec3{0.5, 0, 0});
  const auto cosr = FieldRamp::cosine({0, 1, 0}, 2.0, 1.0);
  CHECK(norm(cosr.b_rate(0.0)) == 0.0);
  // Peak rate b_max pi / (2 tau) at mid-ramp.
  CHECK(cosr.b_rate(0.5).y == doctest::Approx(2.0 * kPi / 2));
  // Integral of the rate reaches b_max.
  CHECK(oracle::trapezoid([&](double t) { return cosr.b_rate(t).y; }, 0.0, 1.0, 20000) ==
        doctest::Approx(2.0).epsilon(1e-8));
  CHECK_THROWS_AS(FieldRamp::linear({1, 1, 0}, 1.0, 1.0), eelab::DomainError);
  CHECK_THROWS_AS(FieldRamp::linear({1, 0, 0}, 1.0, 0.0), eelab::DomainError);
  CHECK(to_string(RampShape::cosine) == "cosine");
}

TEST_CASE("zero ramp keeps the state") {
  const auto ramp = FieldRamp::linear({1, 0, 0}, 0.0, 1.0);
  const SpinState s0{normalized({0.2, -0.4, 0.9}), 0.5};
  const auto tr = integrate(s0, ramp, {1.0, {0, 0, 1}, 0.01});
  REQUIRE(tr.size() == 101);
  for (const auto& p : tr) CHECK(norm(p.state.e_s - s0.e_s) < 1e-15);
  CHECK(tr.back().t == 1.0);
  CHECK(tr.back().state.S_mag == 0.5);
}

TEST_CASE("trajectory bookkeeping") {
  const auto ramp = FieldRamp::linear({1, 0, 0}, 1.0, 1.0);
  const auto tr = integrate({}, ramp, {1.0, {0, 0, 1}, 0.003}, 7);
  CHECK(tr.front().t == 0.0);
  CHECK(tr.back().t == 1.0);
  for (std::size_t i = 1; i < tr.size(); ++i) CHECK(tr[i].t > tr[i - 1].t);
  // 334 steps: samples at 0, every 7th, and the end.
  CHECK(tr.size() == 1 + 334 / 7 + 1);
}

TEST_CASE("matches the closed-form rotation") {
  for (auto shape : {RampShape::linear, RampShape::cosine}) {
    const Vec3 b{0, 1, 0};
    const Vec3 u{0.3, 0, 1.1};
    const auto ramp = FieldRamp::make(shape, b, 2.0, 1.5);
    const SpinState s0{normalized({0.1, 0.2, 1.0}), 1.0};
    const auto tr = integrate(s0, ramp, {0.9, u, 1e-3}, 100);
    for (const auto& p : tr) {
      const double field = shape == RampShape::linear ? 2.0 * p.t / 1.5 : 2.0 * (1 - std::cos(kPi * p.t / 1.5)) / 2;
      CHECK(norm(p.state.e_s - exact(s0.e_s, u, b, 0.9, field)) < 1e-10);
    }
  }
}

TEST_CASE("norm preserved over 1e6 steps") {
  const auto ramp = FieldRamp::cosine(normalized({1, 1, 0}), 50.0, 1.0);
  const auto tr = integrate({normalized({0.3, -0.2, 0.9}), 1.0}, ramp, {1.0, {0.1, 0.2, 1.0}, 1e-6}, 1000);
  CHECK(tr.size() == 1001);
  double worst = 0.0;
  for (const auto& p : tr) worst = std::max(worst, std::abs(norm(p.state.e_s) - 1.0));
  CHECK(worst <= 1e-9);
}

TEST_CASE("sign flip mirrors the trajectory") {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> n01;
  for (int trial = 0; trial < 10; ++trial) {
    const Vec3 e0 = normalized({n01(rng), n01(rng), n01(rng)});
    const auto ramp = FieldRamp::cosine(normalized({n01(rng), n01(rng), n01(rng)}), 3.0, 2.0);
    const LLParams p{1.3, {n01(rng), n01(rng), n01(rng)}, 1e-3};
    const auto a = integrate({e0, 1.0}, ramp, p);
    const auto b = integrate({-e0, 1.0}, ramp, p);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(norm(a[i].state.e_s + b[i].state.e_s) <= 1e-8);
  }
}

TEST_CASE("scaling covariance of kappa and the ramp rate") {
  const Vec3 b = normalized({1, 0.5, 0});
  const SpinState s0{normalized({0, 0.3, 1}), 1.0};
  const auto ref = integrate(s0, FieldRamp::cosine(b, 2.0, 1.0), {1.0, {0, 0, 1}, 1e-3});
  for (double c : {0.25, 4.0}) {
    const auto scaled = integrate(s0, FieldRamp::cosine(b, 2.0 / c, 1.0), {c, {0, 0, 1}, 1e-3});
    REQUIRE(scaled.size() == ref.size());
    for (std::size_t i = 0; i < ref.size(); ++i) CHECK(norm(scaled[i].state.e_s - ref[i].state.e_s) <= 1e-12);
  }
}

TEST_CASE("fourth-order convergence") {
  const auto ramp = FieldRamp::cosine(normalized({1, 0.2, 0}), 4.0, 1.0);
  const SpinState s0{normalized({0.2, 0.1, 1.0}), 1.0};
  const LLParams base{1.0, {0.2, 0, 1.0}, 0.02};
  auto run = [&](double dt) {
    LLParams p = base;
    p.dt = dt;
    return final_e(integrate(s0, ramp, p));
  };
  const Vec3 ref = run(0.002);
  const double e1 = norm(run(0.02) - ref);
  const double e2 = norm(run(0.01) - ref);
  const double ratio = e1 / e2;
  CAPTURE(e1);
  CAPTURE(e2);
  CHECK(ratio >= 14.0);
  CHECK(ratio <= 18.0);
}

TEST_CASE("input validation") {
  const auto ramp = FieldRamp::linear({1, 0, 0}, 1.0, 1.0);
  CHECK_THROWS_AS(integrate({{0, 0, 2}, 1.0}, ramp, {}), eelab::DomainError);
  CHECK_THROWS_AS(integrate({}, ramp, {1.0, {0, 0, 1}, 0.0}), eelab::DomainError);
  CHECK_THROWS_AS(integrate({}, ramp, {1.0, {0, 0, 1}, 1e-10}), eelab::ConfigError);
  CHECK_THROWS_AS(integrate({}, ramp, {}, 0), eelab::DomainError);
}

TEST_CASE("classification") {
  const Vec3 b{0, 0, 1};
  CHECK(classify_deflection({b, 1}, b, 0.9) == Deflection::parallel);
  CHECK(classify_deflection({-b, 1}, b, 0.9) == Deflection::antiparallel);
  CHECK(classify_deflection({{1, 0, 0}, 1}, b, 0.9) == Deflection::unresolved);
  CHECK(classify_deflection({normalized({0.1, 0, 1}), 1}, b) == Deflection::parallel);
  CHECK_THROWS_AS(classify_deflection({b, 1}, b, 1.0), eelab::DomainError);
  CHECK_THROWS_AS(classify_deflection({b, 1}, b, 0.0), eelab::DomainError);
  CHECK(to_string(Deflection::antiparallel) == "antiparallel");
}
