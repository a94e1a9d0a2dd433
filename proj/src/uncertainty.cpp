#include "eelab/uncertainty.hpp"

#include <cmath>
#include <string>

#include "eelab/error.hpp"

namespace eelab::uncertainty {

namespace {

void require_positive(double x, const char* what) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(what) + " must be positive and finite");
  }
}

}  // namespace

double momentum_uncertainty(double band_energy_ev, double mass) {
  require_positive(band_energy_ev, "band energy");
  require_positive(mass, "mass");
  return std::sqrt(2.0 * mass * band_energy_ev * codata::elementary_charge);
}

double position_uncertainty(double dp, double convention_factor) {
  require_positive(dp, "momentum uncertainty");
  require_positive(convention_factor, "convention factor");
  return convention_factor * codata::hbar / dp / kPicometre;
}

double relative_feature_error(double feature_height_pm, double height_error_pm) {
  require_positive(feature_height_pm, "feature height");
  if (!(height_error_pm >= 0.0)) throw DomainError("height error must be non-negative");
  return height_error_pm / feature_height_pm;
}

double compliance_energy(double target_dx_pm, double mass, double convention_factor) {
  require_positive(target_dx_pm, "target position uncertainty");
  require_positive(mass, "mass");
  require_positive(convention_factor, "convention factor");
  const double dp = convention_factor * codata::hbar / (target_dx_pm * kPicometre);
  return dp * dp / (2.0 * mass) / codata::elementary_charge;
}

UncertaintyBudget budget_report(const BudgetInputs& in) {
  require_positive(in.lateral_resolution_pm, "lateral resolution");
  require_positive(in.height_error_pm, "height error");

  UncertaintyBudget b{};
  b.band_energy_ev = in.band_energy_mev * 1e-3;
  b.mass = in.mass;
  b.dp = momentum_uncertainty(b.band_energy_ev, in.mass);
  b.dx_pm = position_uncertainty(b.dp, in.convention_factor);
  b.lateral_resolution_pm = in.lateral_resolution_pm;
  b.feature_height_pm = in.feature_height_pm;
  b.height_error_pm = in.height_error_pm;
  b.relative_error = relative_feature_error(in.feature_height_pm, in.height_error_pm);
  b.compliance_energy_ev = compliance_energy(in.lateral_resolution_pm, in.mass, in.convention_factor);
  b.convention_factor = in.convention_factor;
  b.contradiction = b.dx_pm > in.lateral_resolution_pm;
  return b;
}

}  // namespace eelab::uncertainty
