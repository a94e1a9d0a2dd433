#pragma once

// Dense geometric algebra of 3-D Euclidean space, Cl(3,0).
//
// A multivector is stored as eight doubles in the basis
//   1 | e1 e2 e3 | e23 e31 e12 | e123
// with e_k e_k = +1 and e_j e_k = -e_k e_j for j != k. The pseudoscalar
// I = e1 e2 e3 squares to -1 and commutes with everything; it is the
// imaginary unit of the electron model, so that e1 e2 = I e3.

#include <array>
#include <cmath>
#include <cstddef>

namespace eelab::ga3 {

struct Multivector3 {
  double s = 0.0;
  double v1 = 0.0, v2 = 0.0, v3 = 0.0;
  double b23 = 0.0, b31 = 0.0, b12 = 0.0;
  double p = 0.0;

  static constexpr std::size_t kSize = 8;

  constexpr bool operator==(const Multivector3&) const = default;

  // Components in storage order (s, v1, v2, v3, b23, b31, b12, p).
  constexpr std::array<double, kSize> components() const {
    return {s, v1, v2, v3, b23, b31, b12, p};
  }
  static constexpr Multivector3 from_components(const std::array<double, kSize>& c) {
    return {c[0], c[1], c[2], c[3], c[4], c[5], c[6], c[7]};
  }

  constexpr Multivector3 operator+(const Multivector3& o) const {
    return {s + o.s, v1 + o.v1, v2 + o.v2, v3 + o.v3,
            b23 + o.b23, b31 + o.b31, b12 + o.b12, p + o.p};
  }
  constexpr Multivector3 operator-(const Multivector3& o) const {
    return {s - o.s, v1 - o.v1, v2 - o.v2, v3 - o.v3,
            b23 - o.b23, b31 - o.b31, b12 - o.b12, p - o.p};
  }
  constexpr Multivector3 operator-() const {
    return {-s, -v1, -v2, -v3, -b23, -b31, -b12, -p};
  }
  constexpr Multivector3 operator*(double k) const {
    return {s * k, v1 * k, v2 * k, v3 * k, b23 * k, b31 * k, b12 * k, p * k};
  }
  friend constexpr Multivector3 operator*(double k, const Multivector3& m) { return m * k; }

  Multivector3& operator+=(const Multivector3& o) { return *this = *this + o; }
};

namespace basis {
inline constexpr Multivector3 one{1, 0, 0, 0, 0, 0, 0, 0};
inline constexpr Multivector3 e1{0, 1, 0, 0, 0, 0, 0, 0};
inline constexpr Multivector3 e2{0, 0, 1, 0, 0, 0, 0, 0};
inline constexpr Multivector3 e3{0, 0, 0, 1, 0, 0, 0, 0};
inline constexpr Multivector3 e23{0, 0, 0, 0, 1, 0, 0, 0};
inline constexpr Multivector3 e31{0, 0, 0, 0, 0, 1, 0, 0};
inline constexpr Multivector3 e12{0, 0, 0, 0, 0, 0, 1, 0};
inline constexpr Multivector3 I{0, 0, 0, 0, 0, 0, 0, 1};
}  // namespace basis

inline constexpr Multivector3 scalar(double x) { return {x, 0, 0, 0, 0, 0, 0, 0}; }

// Geometric product.
Multivector3 gp(const Multivector3& a, const Multivector3& b);

// Part of grade g in {0,1,2,3}; any other g throws DomainError.
Multivector3 grade(const Multivector3& a, int g);

// Reversion: grades 0 and 1 unchanged, grades 2 and 3 negated.
Multivector3 reverse(const Multivector3& a);

// Euclidean norm of the coefficient vector.
double norm(const Multivector3& a);

// Largest |coefficient| outside grade g.
double off_grade_magnitude(const Multivector3& a, int g);

// Plain 3-vector used by the dynamics code; maps onto grade 1.
struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;

  constexpr bool operator==(const Vec3&) const = default;
  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr Vec3 operator*(double k) const { return {x * k, y * k, z * k}; }
  friend constexpr Vec3 operator*(double k, const Vec3& v) { return v * k; }
  constexpr Vec3 operator/(double k) const { return {x / k, y / k, z / k}; }
};

constexpr double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }
Vec3 normalized(const Vec3& a);

constexpr Multivector3 to_multivector(const Vec3& v) { return {0, v.x, v.y, v.z, 0, 0, 0, 0}; }
constexpr Vec3 vector_part(const Multivector3& m) { return {m.v1, m.v2, m.v3}; }

// Unit even multivector s + b23 e23 + b31 e31 + b12 e12. Acts on vectors by
// the sandwich x -> R x ~R and is a double cover: R and -R rotate alike.
class Rotor3 {
 public:
  // Identity rotor.
  Rotor3() = default;

  // Throws DomainError unless s^2 + |b|^2 = 1 within 1e-12.
  static Rotor3 from_even(double s, double b23, double b31, double b12);

  double s() const { return s_; }
  double b23() const { return b23_; }
  double b31() const { return b31_; }
  double b12() const { return b12_; }

  Multivector3 as_multivector() const { return {s_, 0, 0, 0, b23_, b31_, b12_, 0}; }
  Rotor3 reversed() const;

  Multivector3 apply(const Multivector3& x) const;
  Vec3 apply(const Vec3& x) const;

  // Composition: (a * b).apply(x) == a.apply(b.apply(x)).
  Rotor3 operator*(const Rotor3& o) const;
  Rotor3 operator-() const;

 private:
  Rotor3(double s, double b23, double b31, double b12) : s_(s), b23_(b23), b31_(b31), b12_(b12) {}

  double s_ = 1.0;
  double b23_ = 0.0, b31_ = 0.0, b12_ = 0.0;
};

// exp(-plane * angle / 2) = cos(angle/2) - plane sin(angle/2).
// For plane = e12 and angle > 0 this turns e1 toward e2. The plane must be a
// pure unit bivector (tolerance 1e-12) or DomainError is thrown.
Rotor3 rotor(const Multivector3& plane, double angle);

}  // namespace eelab::ga3
