// eelab: batch front end for the extended-electron laboratory.
//
//   eelab [--seed N] [--out DIR] [--format csv|json] [--config FILE] <subcommand> [flags]
//
// Flags map onto config keys (see `eelab::cli::schema()`) and override the
// config file.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "eelab/cli/config.hpp"
#include "eelab/cli/run.hpp"
#include "eelab/error.hpp"
#include "eelab/version.hpp"

namespace {

enum ExitCode : int { kOk = 0, kFailure = 1, kConfig = 2, kDomain = 3, kIo = 4 };

// Options bound to config keys; values are collected only when given.
class KeyOptions {
 public:
  void add(CLI::App* app, const std::string& flag, const std::string& key, const std::string& help) {
    auto& slot = values_[key];
    bound_.emplace_back(app->add_option(flag, slot, help), key);
  }

  void collect(std::vector<eelab::cli::Override>& out) const {
    for (const auto& [opt, key] : bound_) {
      if (opt->count() > 0) out.push_back({key, values_.at(key)});
    }
  }

 private:
  std::map<std::string, std::string> values_;
  std::vector<std::pair<CLI::Option*, std::string>> bound_;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw eelab::IoError("cannot read config file " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extended-electron laboratory: geometric-algebra electron model, spin dynamics, "
               "EPR correlations and STM uncertainty budgets"};
  app.set_version_flag("--version", std::string(eelab::kToolName) + " " + eelab::kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  KeyOptions keys;
  std::string config_path;
  keys.add(&app, "--seed", "seed", "random seed");
  keys.add(&app, "--out", "out", "output directory");
  keys.add(&app, "--format", "format", "csv or json for tabular artifacts");
  app.add_option("--config", config_path, "key = value config file");

  auto* electron = app.add_subcommand("electron", "plane-wave electron profiles");
  electron->add_flag("--profile", "emit density/energy/wavefunction profiles (default)");
  keys.add(electron, "--rho0", "electron.rho0", "mass-density amplitude");
  keys.add(electron, "--u", "electron.u", "mechanical velocity");
  keys.add(electron, "--helicity", "electron.helicity", "+ or -");
  keys.add(electron, "--phi-deg", "electron.phi_deg", "field phase in degrees");
  keys.add(electron, "--units", "electron.units", "atomic or si");
  keys.add(electron, "--zmin", "electron.zmin", "window start");
  keys.add(electron, "--zmax", "electron.zmax", "window end");
  keys.add(electron, "--points", "electron.points", "sample count");
  keys.add(electron, "--t", "electron.t", "time");

  auto* epr = app.add_subcommand("epr", "EPR/CHSH correlations");
  auto* curve = epr->add_flag("--curve", "correlation curve E(phi)");
  auto* chsh = epr->add_flag("--chsh", "CHSH report");
  auto* singles = epr->add_flag("--singles", "Monte Carlo singles");
  auto* pair = epr->add_flag("--pair", "coincidence table for one setting pair");
  for (auto* a : {curve, chsh, singles, pair}) {
    for (auto* b : {curve, chsh, singles, pair}) {
      if (a != b) a->excludes(b);
    }
  }
  keys.add(epr, "--angles", "epr.angles", "phi1,phi1',phi2,phi2' in degrees");
  keys.add(epr, "--angle", "epr.angle_deg", "singles analyzer angle in degrees");
  keys.add(epr, "--side", "epr.side", "A or B");
  keys.add(epr, "--n", "epr.n", "singles trials");
  keys.add(epr, "--workers", "epr.workers", "worker threads");
  keys.add(epr, "--phi1", "epr.phi1_deg", "A angle in degrees");
  keys.add(epr, "--phi2", "epr.phi2_deg", "B angle in degrees");
  keys.add(epr, "--delta", "epr.delta_deg", "source phase difference in degrees");
  keys.add(epr, "--step", "epr.curve_step_deg", "curve spacing in degrees");

  auto* sg = app.add_subcommand("sterngerlach", "spin direction under a field ramp");
  keys.add(sg, "--kappa", "sterngerlach.kappa", "coupling constant");
  keys.add(sg, "--u", "sterngerlach.u", "velocity ux,uy,uz");
  keys.add(sg, "--bdir", "sterngerlach.bdir", "field direction x,y,z");
  keys.add(sg, "--brate", "sterngerlach.brate", "ramp rate");
  keys.add(sg, "--ramp", "sterngerlach.ramp", "linear or cosine");
  keys.add(sg, "--duration", "sterngerlach.duration", "ramp duration");
  keys.add(sg, "--dt", "sterngerlach.dt", "step size");
  keys.add(sg, "--e0", "sterngerlach.e0", "initial spin direction x,y,z");
  keys.add(sg, "--threshold", "sterngerlach.threshold", "classification threshold");
  keys.add(sg, "--record-every", "sterngerlach.record_every", "trajectory stride");

  auto* budget = app.add_subcommand("budget", "STM uncertainty budget");
  keys.add(budget, "--band-energy-mev", "budget.band_energy_mev", "band energy (meV)");
  keys.add(budget, "--resolution-pm", "budget.resolution_pm", "lateral resolution (pm)");
  keys.add(budget, "--feature-pm", "budget.feature_pm", "feature height (pm)");
  keys.add(budget, "--error-pm", "budget.error_pm", "height error (pm)");
  keys.add(budget, "--convention", "budget.convention", "0.5 or 1.0");

  CLI11_PARSE(app, argc, argv);

  try {
    std::vector<eelab::cli::Override> overrides;
    keys.collect(overrides);
    if (curve->count()) overrides.push_back({"epr.mode", "curve"});
    if (chsh->count()) overrides.push_back({"epr.mode", "chsh"});
    if (singles->count()) overrides.push_back({"epr.mode", "singles"});
    if (pair->count()) overrides.push_back({"epr.mode", "pair"});

    const std::string text = config_path.empty() ? std::string{} : read_file(config_path);
    const auto sub = eelab::cli::parse_subcommand(app.get_subcommands().front()->get_name());
    const auto cfg = eelab::cli::parse_config(text, overrides, sub);
    for (const auto& path : eelab::cli::run(cfg, std::cout)) std::cout << "wrote " << path.string() << "\n";
    return kOk;
  } catch (const eelab::ConfigError& e) {
    std::cerr << "eelab: configuration error: " << e.what() << "\n";
    return kConfig;
  } catch (const eelab::IoError& e) {
    std::cerr << "eelab: I/O error: " << e.what() << "\n";
    return kIo;
  } catch (const eelab::DomainError& e) {
    std::cerr << "eelab: domain error: " << e.what() << "\n";
    return kDomain;
  } catch (const eelab::UnsupportedConfiguration& e) {
    std::cerr << "eelab: unsupported configuration: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "eelab: error: " << e.what() << "\n";
    return kFailure;
  }
}
