#include "eelab/spin_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "eelab/error.hpp"

namespace eelab::spin {

namespace {

constexpr double kUnitTolerance = 1e-9;

void check_ramp_args(const Vec3& b_dir, double tau) {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw DomainError("ramp duration must be positive");
  if (std::abs(ga3::norm(b_dir) - 1.0) > kUnitTolerance) {
    throw DomainError("ramp direction must be a unit vector");
  }
}

}  // namespace

FieldRamp FieldRamp::linear(const Vec3& b_dir, double b_max, double tau) {
  check_ramp_args(b_dir, tau);
  const Vec3 rate = b_dir * (b_max / tau);
  return {b_dir, [rate](double) { return rate; }, tau};
}

FieldRamp FieldRamp::cosine(const Vec3& b_dir, double b_max, double tau) {
  check_ramp_args(b_dir, tau);
  const double w = std::numbers::pi / tau;
  const Vec3 peak = b_dir * (0.5 * b_max * w);
  return {b_dir, [peak, w](double t) { return peak * std::sin(w * t); }, tau};
}

FieldRamp FieldRamp::make(RampShape shape, const Vec3& b_dir, double b_max, double tau) {
  return shape == RampShape::linear ? linear(b_dir, b_max, tau) : cosine(b_dir, b_max, tau);
}

std::string_view to_string(Deflection d) {
  switch (d) {
    case Deflection::parallel: return "parallel";
    case Deflection::antiparallel: return "antiparallel";
    case Deflection::unresolved: break;
  }
  return "unresolved";
}

std::string_view to_string(RampShape s) { return s == RampShape::linear ? "linear" : "cosine"; }

Vec3 ll_rhs(const SpinState& state, const LLParams& params, const Vec3& dBdt) {
  return params.kappa * ga3::cross(state.e_s, ga3::cross(params.u, dBdt));
}

std::vector<TrajectoryPoint> integrate(const SpinState& state0, const FieldRamp& ramp,
                                       const LLParams& params, std::int64_t record_every) {
  if (!(params.dt > 0.0) || !std::isfinite(params.dt)) throw DomainError("dt must be positive");
  if (!std::isfinite(params.kappa)) throw DomainError("kappa must be finite");
  if (!(ramp.duration > 0.0)) throw DomainError("ramp duration must be positive");
  if (!ramp.b_rate) throw DomainError("ramp has no rate function");
  if (std::abs(ga3::norm(state0.e_s) - 1.0) > kUnitTolerance) {
    throw DomainError("initial spin direction must be a unit vector");
  }
  if (record_every < 1) throw DomainError("record_every must be >= 1");

  const double ratio = std::ceil(ramp.duration / params.dt * (1.0 - 1e-12));
  if (!(ratio <= static_cast<double>(kMaxSteps))) {
    throw ConfigError("integration needs " + std::to_string(ratio) + " steps (limit 1e9)",
                      "sterngerlach.dt");
  }
  const auto steps = std::max<std::int64_t>(1, static_cast<std::int64_t>(ratio));
  const double h = ramp.duration / static_cast<double>(steps);

  std::vector<TrajectoryPoint> out;
  out.reserve(static_cast<std::size_t>(steps / record_every + 2));
  out.push_back({0.0, state0});

  SpinState state = state0;
  const auto f = [&](const Vec3& e, double t) {
    return ll_rhs({e, state.S_mag}, params, ramp.b_rate(t));
  };
  for (std::int64_t n = 0; n < steps; ++n) {
    const double t = h * static_cast<double>(n);
    const Vec3& y = state.e_s;
    const Vec3 k1 = f(y, t);
    const Vec3 k2 = f(y + k1 * (0.5 * h), t + 0.5 * h);
    const Vec3 k3 = f(y + k2 * (0.5 * h), t + 0.5 * h);
    const Vec3 k4 = f(y + k3 * h, t + h);
    state.e_s = ga3::normalized(y + (k1 + 2.0 * k2 + 2.0 * k3 + k4) * (h / 6.0));

    const std::int64_t done = n + 1;
    if (done == steps) {
      out.push_back({ramp.duration, state});
    } else if (done % record_every == 0) {
      out.push_back({h * static_cast<double>(done), state});
    }
  }
  return out;
}

Deflection classify_deflection(const SpinState& final_state, const Vec3& b_dir, double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0)) throw DomainError("threshold must lie in (0, 1)");
  const double c = ga3::dot(final_state.e_s, b_dir);
  if (c > threshold) return Deflection::parallel;
  if (c < -threshold) return Deflection::antiparallel;
  return Deflection::unresolved;
}

}  // namespace eelab::spin
