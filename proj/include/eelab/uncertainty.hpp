#pragma once

// Uncertainty budget for an STM charge-density measurement: band energy ->
// momentum spread -> position spread, compared with the instrument's lateral
// resolution. Energies in eV, lengths in pm, momenta in kg m/s.

namespace eelab::uncertainty {

namespace codata {
// CODATA 2018, 9 significant figures.
inline constexpr double hbar = 1.05457182e-34;            // J s
inline constexpr double electron_mass = 9.10938370e-31;   // kg
inline constexpr double elementary_charge = 1.60217663e-19;  // C (J per eV)
}  // namespace codata

inline constexpr double kPicometre = 1e-12;

// Delta x = factor * hbar / Delta p. 1/2 is the Kennard bound.
inline constexpr double kDefaultConvention = 0.5;

struct BudgetInputs {
  double band_energy_mev = 80.0;
  double mass = codata::electron_mass;
  double lateral_resolution_pm = 20.0;
  double feature_height_pm = 30.0;
  double height_error_pm = 0.1;
  double convention_factor = kDefaultConvention;
};

struct UncertaintyBudget {
  double band_energy_ev;
  double mass;
  double dp;
  double dx_pm;
  double lateral_resolution_pm;
  double feature_height_pm;
  double height_error_pm;
  double relative_error;
  double compliance_energy_ev;
  double convention_factor;
  // dx strictly exceeds the lateral resolution.
  bool contradiction;
};

// sqrt(2 m E); the whole band energy goes to the measured axis.
double momentum_uncertainty(double band_energy_ev, double mass);

double position_uncertainty(double dp, double convention_factor);

double relative_feature_error(double feature_height_pm, double height_error_pm);

// Energy at which the position spread shrinks to target_dx.
double compliance_energy(double target_dx_pm, double mass, double convention_factor);

UncertaintyBudget budget_report(const BudgetInputs& in);

}  // namespace eelab::uncertainty
