#pragma once

// Spin direction dynamics under a ramping magnetic field:
//
//   d e_S / dt = kappa * e_S x (u x dB/dt)
//
// The right-hand side is orthogonal to e_S, so the exact flow keeps |e_S| = 1.
// The integrator is classical fixed-step RK4 with renormalization after
// every step.

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "eelab/ga3.hpp"

namespace eelab::spin {

using ga3::Vec3;

struct SpinState {
  Vec3 e_s{0.0, 0.0, 1.0};
  double S_mag = 1.0;
};

enum class RampShape { linear, cosine };

// Field switched on from 0 to b_max * b_dir over `duration`.
struct FieldRamp {
  Vec3 b_dir{1.0, 0.0, 0.0};
  // dB/dt as a function of time on [0, duration].
  std::function<Vec3(double)> b_rate;
  double duration = 1.0;

  // B(t) = b_max (t / tau) b_dir, so dB/dt = b_max / tau constant.
  static FieldRamp linear(const Vec3& b_dir, double b_max, double tau);
  // B(t) = b_max (1 - cos(pi t / tau)) / 2 b_dir.
  static FieldRamp cosine(const Vec3& b_dir, double b_max, double tau);
  static FieldRamp make(RampShape shape, const Vec3& b_dir, double b_max, double tau);
};

struct LLParams {
  double kappa = 1.0;
  Vec3 u{0.0, 0.0, 1.0};
  double dt = 1e-3;
};

struct TrajectoryPoint {
  double t = 0.0;
  SpinState state;
};

enum class Deflection { parallel, antiparallel, unresolved };

std::string_view to_string(Deflection d);
std::string_view to_string(RampShape s);

inline constexpr double kDefaultThreshold = 0.99;
inline constexpr std::int64_t kMaxSteps = 1'000'000'000;

Vec3 ll_rhs(const SpinState& state, const LLParams& params, const Vec3& dBdt);

// Integrates over [0, ramp.duration] with ceil(duration / dt) equal steps.
// Every `record_every`-th step is stored; t = 0 and t = duration always are.
// Throws ConfigError when more than kMaxSteps steps would be needed and
// DomainError for a non-unit initial direction or non-positive dt.
std::vector<TrajectoryPoint> integrate(const SpinState& state0, const FieldRamp& ramp,
                                       const LLParams& params, std::int64_t record_every = 1);

Deflection classify_deflection(const SpinState& final_state, const Vec3& b_dir,
                               double threshold = kDefaultThreshold);

}  // namespace eelab::spin
