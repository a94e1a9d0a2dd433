#pragma once

// Extended-electron plane wave moving along e3.
//
// The electron carries an oscillating mass density rho(z,t) and transverse
// intrinsic fields E (along e1) and H (along +-e2) whose energy makes up the
// deficit, so that the energy density is rho0 u^2 / 2 everywhere. The
// wavefunction is the even multivector sqrt(rho) + I e3 sqrt(S), whose
// squared modulus psi~ psi = rho + S = rho0 is constant.
//
// Wavelength and frequency follow the de Broglie closure
//   k = 2 pi / lambda = m u / hbar,   omega = 2 pi nu = m u^2 / (2 hbar),
// which makes the group velocity d omega / d k equal to u.

#include <complex>
#include <numbers>
#include <vector>

#include "eelab/ga3.hpp"

namespace eelab::electron {

using ga3::Multivector3;
using ga3::Vec3;

// Reported only; no stability dynamics are derived from it.
inline constexpr double kCohesivePotentialEv = -8.16;

struct UnitSystem {
  double hbar;
  double eps0;
  double mu0;

  // hbar = m_e = 1, 4 pi eps0 = 1, c = 1/alpha.
  static UnitSystem atomic();
  // CODATA 2018, 9 significant figures.
  static UnitSystem si();
};

enum class Helicity { plus, minus };

struct ElectronParams {
  double rho0 = 1.0;
  double u = 1.0;
  Helicity helicity = Helicity::plus;
  double phi = std::numbers::pi / 2;
  double mass = 1.0;
  // Fraction of rho0 u^2 / 2 carried by the electric term; 0.5 is equipartition.
  double field_split = 0.5;
  UnitSystem units = UnitSystem::atomic();
};

class PlaneWaveElectron {
 public:
  // Throws DomainError on rho0 <= 0, u < 0, mass <= 0, split outside [0,1].
  static PlaneWaveElectron create(const ElectronParams& params);

  const ElectronParams& params() const { return params_; }
  double rho0() const { return params_.rho0; }
  double u() const { return params_.u; }
  Helicity helicity() const { return params_.helicity; }
  double phi() const { return params_.phi; }
  double mass() const { return params_.mass; }
  const UnitSystem& units() const { return params_.units; }

  double wavenumber() const { return k_; }
  double angular_frequency() const { return omega_; }
  // Infinite for u = 0.
  double lambda() const;
  double nu() const;
  double E0() const { return E0_; }
  double H0() const { return H0_; }
  // Amplitude of the spin density, equal to rho0.
  double S0() const { return params_.rho0; }

  // Phase 2 pi z / lambda - 2 pi nu t.
  double phase(double z, double t) const { return k_ * z - omega_ * t; }
  double helicity_sign() const { return params_.helicity == Helicity::plus ? 1.0 : -1.0; }

 private:
  explicit PlaneWaveElectron(const ElectronParams& p);

  ElectronParams params_;
  double k_ = 0.0;
  double omega_ = 0.0;
  double E0_ = 0.0;
  double H0_ = 0.0;
};

struct FieldPair {
  Multivector3 E;
  Multivector3 H;
};

struct WavefunctionSample {
  Multivector3 psi;
  double z = 0.0;
  double t = 0.0;
};

struct RateOfChange {
  double dS_dt = 0.0;
  double drho_dt = 0.0;
};

struct ProfileRow {
  double z, t, rho, omega_kin, omega_field, S, psi_scalar, psi_pseudo;
};

// rho0/2 [1 + cos(4 pi z/lambda - 4 pi nu t)].
double density(const PlaneWaveElectron& e, double z, double t);
// rho0 sin^2(2 pi z/lambda - 2 pi nu t); the field (spin) share of rho0.
double spin_density(const PlaneWaveElectron& e, double z, double t);

double kinetic_energy_density(const PlaneWaveElectron& e, double z, double t);
FieldPair fields(const PlaneWaveElectron& e, double z, double t);
double field_energy_density(const PlaneWaveElectron& e, double z, double t);

// I e3 E0 H0 sin^2(...), negated for minus helicity. Only defined at
// phi = pi/2; other phases throw UnsupportedConfiguration.
Multivector3 spin(const PlaneWaveElectron& e, double z, double t);

// m u^2 / 2. The extension `volume` must satisfy rho0 * volume = m.
double total_energy(const PlaneWaveElectron& e, double volume);

WavefunctionSample wavefunction(const PlaneWaveElectron& e, double z, double t);
WavefunctionSample conj(const WavefunctionSample& w);

// Complex reduction sqrt(rho0) exp[i(2 pi z/lambda - 2 pi nu t)].
std::complex<double> schrodinger_wave(const PlaneWaveElectron& e, double z, double t);

// omega(k) = hbar k^2 / (2 m).
double dispersion_omega(double k, double mass, double hbar);
double group_velocity(const PlaneWaveElectron& e);
// Same closure, usable at u = 0.
double group_velocity(double mass, double u, double hbar);

// Local Ehrenfest update rho0 du/dt = -grad(phi). Only the e3 component of
// the gradient may be non-zero. Returns a new electron with all derived
// quantities rebuilt; throws DomainError if u would drop to <= 0.
PlaneWaveElectron ehrenfest_step(const PlaneWaveElectron& e, const Vec3& grad_potential, double dt);

// Central-difference time derivatives of S and rho at (z,t).
RateOfChange complementarity_check(const PlaneWaveElectron& e, double z, double t, double dt);

// `points` samples evenly spaced on [zmin, zmax] at time t.
std::vector<ProfileRow> profile(const PlaneWaveElectron& e, double zmin, double zmax, int points, double t);

}  // namespace eelab::electron
