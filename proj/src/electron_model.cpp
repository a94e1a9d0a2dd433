#include "eelab/electron_model.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "eelab/error.hpp"

namespace eelab::electron {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPhaseTolerance = 1e-12;
constexpr double kNormalizationTolerance = 1e-12;

void require_moving(const PlaneWaveElectron& e) {
  if (!(e.u() > 0.0)) {
    throw DomainError("u = 0 gives an infinite wavelength; profile is undefined");
  }
}

void require_quarter_phase(const PlaneWaveElectron& e) {
  if (std::abs(e.phi() - kPi / 2) > kPhaseTolerance) {
    throw UnsupportedConfiguration("closed-form spin requires phi = pi/2, got phi = " +
                                   std::to_string(e.phi()));
  }
}

}  // namespace

UnitSystem UnitSystem::atomic() {
  constexpr double c = 137.035999;  // 1/alpha, CODATA 2018
  constexpr double eps0 = 1.0 / (4.0 * kPi);
  return {1.0, eps0, 1.0 / (eps0 * c * c)};
}

UnitSystem UnitSystem::si() {
  return {1.05457182e-34,   // J s
          8.85418781e-12,   // F/m
          1.25663706e-6};   // N/A^2
}

PlaneWaveElectron::PlaneWaveElectron(const ElectronParams& p) : params_(p) {
  const double hbar = p.units.hbar;
  k_ = p.mass * p.u / hbar;
  omega_ = p.mass * p.u * p.u / (2.0 * hbar);
  // eps0 E0^2 / 2 = f rho0 u^2 / 2 and mu0 H0^2 / 2 = (1 - f) rho0 u^2 / 2.
  const double energy = p.rho0 * p.u * p.u;
  E0_ = std::sqrt(p.field_split * energy / p.units.eps0);
  H0_ = std::sqrt((1.0 - p.field_split) * energy / p.units.mu0);
}

PlaneWaveElectron PlaneWaveElectron::create(const ElectronParams& p) {
  if (!(p.rho0 > 0.0) || !std::isfinite(p.rho0)) throw DomainError("rho0 must be positive");
  if (!(p.u >= 0.0) || !std::isfinite(p.u)) throw DomainError("u must be finite and >= 0");
  if (!(p.mass > 0.0) || !std::isfinite(p.mass)) throw DomainError("mass must be positive");
  if (!(p.field_split >= 0.0 && p.field_split <= 1.0)) {
    throw DomainError("field_split must lie in [0, 1]");
  }
  if (!std::isfinite(p.phi)) throw DomainError("phi must be finite");
  if (!(p.units.hbar > 0.0 && p.units.eps0 > 0.0 && p.units.mu0 > 0.0)) {
    throw DomainError("unit constants must be positive");
  }
  return PlaneWaveElectron(p);
}

double PlaneWaveElectron::lambda() const {
  return k_ > 0.0 ? 2.0 * kPi / k_ : std::numeric_limits<double>::infinity();
}

double PlaneWaveElectron::nu() const { return omega_ / (2.0 * kPi); }

double density(const PlaneWaveElectron& e, double z, double t) {
  require_moving(e);
  return 0.5 * e.rho0() * (1.0 + std::cos(2.0 * e.phase(z, t)));
}

double spin_density(const PlaneWaveElectron& e, double z, double t) {
  require_moving(e);
  const double s = std::sin(e.phase(z, t));
  return e.S0() * s * s;
}

double kinetic_energy_density(const PlaneWaveElectron& e, double z, double t) {
  require_moving(e);
  const double c = std::cos(e.phase(z, t));
  return 0.5 * e.rho0() * e.u() * e.u() * c * c;
}

FieldPair fields(const PlaneWaveElectron& e, double z, double t) {
  require_moving(e);
  const double c = std::cos(e.phase(z, t) + e.phi());
  // Minus helicity reverses H so that E H flips sign with the spin.
  return {ga3::basis::e1 * (e.E0() * c), ga3::basis::e2 * (e.helicity_sign() * e.H0() * c)};
}

double field_energy_density(const PlaneWaveElectron& e, double z, double t) {
  require_moving(e);
  const auto& units = e.units();
  const double amplitude = 0.5 * units.eps0 * e.E0() * e.E0() + 0.5 * units.mu0 * e.H0() * e.H0();
  const double s = std::sin(e.phase(z, t));
  return amplitude * s * s;
}

Multivector3 spin(const PlaneWaveElectron& e, double z, double t) {
  require_moving(e);
  require_quarter_phase(e);
  const double s = std::sin(e.phase(z, t));
  const Multivector3 i_e3 = ga3::gp(ga3::basis::I, ga3::basis::e3);
  return i_e3 * (e.helicity_sign() * e.E0() * e.H0() * s * s);
}

double total_energy(const PlaneWaveElectron& e, double volume) {
  if (!(volume > 0.0)) throw DomainError("volume must be positive");
  const double m = e.mass();
  if (std::abs(e.rho0() * volume - m) > kNormalizationTolerance * m) {
    throw DomainError("inconsistent normalization: rho0 * volume must equal the mass");
  }
  return 0.5 * m * e.u() * e.u();
}

WavefunctionSample wavefunction(const PlaneWaveElectron& e, double z, double t) {
  require_moving(e);
  require_quarter_phase(e);
  const double theta = e.phase(z, t);
  const double root_rho = std::sqrt(e.rho0()) * std::abs(std::cos(theta));
  const double root_s = std::sqrt(e.S0()) * std::abs(std::sin(theta));
  const Multivector3 i_e3 = ga3::gp(ga3::basis::I, ga3::basis::e3);
  return {ga3::scalar(root_rho) + i_e3 * (e.helicity_sign() * root_s), z, t};
}

WavefunctionSample conj(const WavefunctionSample& w) {
  // On the even subalgebra spanned by 1 and I e3, reversion flips only the
  // pseudovector part.
  return {ga3::reverse(w.psi), w.z, w.t};
}

std::complex<double> schrodinger_wave(const PlaneWaveElectron& e, double z, double t) {
  require_moving(e);
  return std::polar(std::sqrt(e.rho0()), e.phase(z, t));
}

double dispersion_omega(double k, double mass, double hbar) { return hbar * k * k / (2.0 * mass); }

double group_velocity(double mass, double u, double hbar) {
  if (!(mass > 0.0) || !(hbar > 0.0)) throw DomainError("mass and hbar must be positive");
  // d omega / d k = hbar k / m evaluated at k = m u / hbar.
  const double k = mass * u / hbar;
  return hbar * k / mass;
}

double group_velocity(const PlaneWaveElectron& e) {
  return group_velocity(e.mass(), e.u(), e.units().hbar);
}

PlaneWaveElectron ehrenfest_step(const PlaneWaveElectron& e, const Vec3& grad_potential, double dt) {
  if (!(dt > 0.0)) throw DomainError("dt must be positive");
  if (grad_potential.x != 0.0 || grad_potential.y != 0.0) {
    throw DomainError("only a potential gradient along e3 is supported");
  }
  if (grad_potential.z == 0.0) return e;
  ElectronParams next = e.params();
  next.u = e.u() - grad_potential.z / e.rho0() * dt;
  if (!(next.u > 0.0)) {
    throw DomainError("Ehrenfest step drives u to " + std::to_string(next.u) + " (must stay > 0)");
  }
  return PlaneWaveElectron::create(next);
}

RateOfChange complementarity_check(const PlaneWaveElectron& e, double z, double t, double dt) {
  require_moving(e);
  if (!(dt > 0.0)) throw DomainError("dt must be positive");
  // Extended precision: with dt ~ 1e-9 / nu the double-precision difference
  // quotient loses ~8 digits to cancellation.
  using real = long double;
  const real k = e.wavenumber();
  const real w = e.angular_frequency();
  const real rho0 = e.rho0();
  const auto theta = [&](real time) { return k * static_cast<real>(z) - w * time; };
  const auto rho = [&](real time) {
    const real c = std::cos(theta(time));
    return rho0 * c * c;
  };
  const auto s = [&](real time) {
    const real sn = std::sin(theta(time));
    return rho0 * sn * sn;
  };
  const real tp = static_cast<real>(t) + static_cast<real>(dt);
  const real tm = static_cast<real>(t) - static_cast<real>(dt);
  const real h2 = tp - tm;
  return {static_cast<double>((s(tp) - s(tm)) / h2), static_cast<double>((rho(tp) - rho(tm)) / h2)};
}

std::vector<ProfileRow> profile(const PlaneWaveElectron& e, double zmin, double zmax, int points, double t) {
  if (points < 1) throw DomainError("profile needs at least one point");
  if (!(zmax >= zmin)) throw DomainError("profile window needs zmax >= zmin");
  std::vector<ProfileRow> rows;
  rows.reserve(static_cast<std::size_t>(points));
  const double step = points > 1 ? (zmax - zmin) / (points - 1) : 0.0;
  const bool closed_form = std::abs(e.phi() - kPi / 2) <= kPhaseTolerance;
  for (int i = 0; i < points; ++i) {
    const double z = zmin + step * i;
    ProfileRow row{z, t, density(e, z, t), kinetic_energy_density(e, z, t),
                   field_energy_density(e, z, t), spin_density(e, z, t), 0.0, 0.0};
    if (closed_form) {
      const auto psi = wavefunction(e, z, t).psi;
      row.psi_scalar = psi.s;
      row.psi_pseudo = psi.b12;
    } else {
      row.psi_scalar = std::sqrt(row.rho);
      row.psi_pseudo = e.helicity_sign() * std::sqrt(row.S);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace eelab::electron
