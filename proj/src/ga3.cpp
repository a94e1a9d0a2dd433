#include "eelab/ga3.hpp"

#include <algorithm>
#include <string>

#include "eelab/error.hpp"

namespace eelab::ga3 {

namespace {

constexpr double kUnitTolerance = 1e-12;

// Grade of each storage slot.
constexpr std::array<int, Multivector3::kSize> kSlotGrade{0, 1, 1, 1, 2, 2, 2, 3};

void check_grade_index(int g) {
  if (g < 0 || g > 3) {
    throw DomainError("grade index must be in 0..3, got " + std::to_string(g));
  }
}

}  // namespace

Multivector3 gp(const Multivector3& a, const Multivector3& b) {
  Multivector3 c;
  c.s = a.s * b.s + a.v1 * b.v1 + a.v2 * b.v2 + a.v3 * b.v3
      - a.b23 * b.b23 - a.b31 * b.b31 - a.b12 * b.b12 - a.p * b.p;

  c.v1 = a.s * b.v1 + a.v1 * b.s - a.v2 * b.b12 + a.v3 * b.b31
       + a.b12 * b.v2 - a.b31 * b.v3 - a.b23 * b.p - a.p * b.b23;
  c.v2 = a.s * b.v2 + a.v2 * b.s - a.v3 * b.b23 + a.v1 * b.b12
       + a.b23 * b.v3 - a.b12 * b.v1 - a.b31 * b.p - a.p * b.b31;
  c.v3 = a.s * b.v3 + a.v3 * b.s - a.v1 * b.b31 + a.v2 * b.b23
       + a.b31 * b.v1 - a.b23 * b.v2 - a.b12 * b.p - a.p * b.b12;

  c.b23 = a.s * b.b23 + a.b23 * b.s + a.v2 * b.v3 - a.v3 * b.v2
        + a.v1 * b.p + a.p * b.v1 + a.b12 * b.b31 - a.b31 * b.b12;
  c.b31 = a.s * b.b31 + a.b31 * b.s + a.v3 * b.v1 - a.v1 * b.v3
        + a.v2 * b.p + a.p * b.v2 + a.b23 * b.b12 - a.b12 * b.b23;
  c.b12 = a.s * b.b12 + a.b12 * b.s + a.v1 * b.v2 - a.v2 * b.v1
        + a.v3 * b.p + a.p * b.v3 + a.b31 * b.b23 - a.b23 * b.b31;

  c.p = a.s * b.p + a.p * b.s
      + a.v1 * b.b23 + a.v2 * b.b31 + a.v3 * b.b12
      + a.b23 * b.v1 + a.b31 * b.v2 + a.b12 * b.v3;
  return c;
}

Multivector3 grade(const Multivector3& a, int g) {
  check_grade_index(g);
  auto c = a.components();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (kSlotGrade[k] != g) c[k] = 0.0;
  }
  return Multivector3::from_components(c);
}

Multivector3 reverse(const Multivector3& a) {
  return {a.s, a.v1, a.v2, a.v3, -a.b23, -a.b31, -a.b12, -a.p};
}

double norm(const Multivector3& a) {
  double acc = 0.0;
  for (double x : a.components()) acc += x * x;
  return std::sqrt(acc);
}

double off_grade_magnitude(const Multivector3& a, int g) {
  check_grade_index(g);
  const auto c = a.components();
  double worst = 0.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (kSlotGrade[k] != g) worst = std::max(worst, std::abs(c[k]));
  }
  return worst;
}

Vec3 normalized(const Vec3& a) {
  const double n = norm(a);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw DomainError("cannot normalize a zero or non-finite vector");
  }
  return a / n;
}

Rotor3 Rotor3::from_even(double s, double b23, double b31, double b12) {
  const double n2 = s * s + b23 * b23 + b31 * b31 + b12 * b12;
  if (!(std::abs(n2 - 1.0) <= kUnitTolerance)) {
    throw DomainError("rotor components are not unit norm (|R|^2 = " + std::to_string(n2) + ")");
  }
  return {s, b23, b31, b12};
}

Rotor3 Rotor3::reversed() const { return {s_, -b23_, -b31_, -b12_}; }

Multivector3 Rotor3::apply(const Multivector3& x) const {
  return gp(gp(as_multivector(), x), reversed().as_multivector());
}

Vec3 Rotor3::apply(const Vec3& x) const { return vector_part(apply(to_multivector(x))); }

Rotor3 Rotor3::operator*(const Rotor3& o) const {
  const Multivector3 m = gp(as_multivector(), o.as_multivector());
  return {m.s, m.b23, m.b31, m.b12};
}

Rotor3 Rotor3::operator-() const { return {-s_, -b23_, -b31_, -b12_}; }

Rotor3 rotor(const Multivector3& plane, double angle) {
  if (off_grade_magnitude(plane, 2) > kUnitTolerance) {
    throw DomainError("rotor plane must be a pure bivector");
  }
  if (std::abs(norm(plane) - 1.0) > kUnitTolerance) {
    throw DomainError("rotor plane must have unit norm");
  }
  const double c = std::cos(0.5 * angle);
  const double sn = std::sin(0.5 * angle) / norm(plane);
  return Rotor3::from_even(c, -plane.b23 * sn, -plane.b31 * sn, -plane.b12 * sn);
}

}  // namespace eelab::ga3
