#include "eelab/cli/run.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include <json.hpp>

#include "eelab/electron_model.hpp"
#include "eelab/epr_model.hpp"
#include "eelab/error.hpp"
#include "eelab/spin_dynamics.hpp"
#include "eelab/uncertainty.hpp"
#include "eelab/version.hpp"

namespace eelab::cli {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

constexpr double kDeg = std::numbers::pi / 180.0;

Json tool_json() { return {{"name", kToolName}, {"version", kVersion}}; }

Json config_json(const RunConfig& cfg) {
  Json j = Json::object();
  j["subcommand"] = std::string(to_string(cfg.subcommand));
  for (const auto& [key, text] : cfg.resolved()) {
    std::visit([&, k = key](const auto& v) { j[k] = v; }, cfg.params.at(key));
  }
  return j;
}

Json envelope(const RunConfig& cfg) {
  Json j = Json::object();
  j["tool"] = tool_json();
  j["config"] = config_json(cfg);
  return j;
}

class Writer {
 public:
  explicit Writer(const RunConfig& cfg) : cfg_(cfg) {
    std::error_code ec;
    fs::create_directories(cfg.output_path, ec);
    if (ec || !fs::is_directory(cfg.output_path)) {
      throw IoError("cannot create output directory " + cfg.output_path.string() + ": " + ec.message());
    }
  }

  void json(const std::string& name, const Json& body) { write(name, body.dump(2) + "\n"); }

  // Header row preceded by '#' lines holding the tool version and resolved config.
  void csv(const std::string& name, const std::vector<std::string>& columns,
           const std::vector<std::vector<double>>& rows) {
    std::string out;
    out += "# ";
    out += kToolName;
    out += " ";
    out += kVersion;
    out += "\n# subcommand = ";
    out += to_string(cfg_.subcommand);
    out += "\n";
    for (const auto& [k, v] : cfg_.resolved()) out += "# " + k + " = " + v + "\n";
    for (std::size_t i = 0; i < columns.size(); ++i) out += (i ? "," : "") + columns[i];
    out += "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ",";
        out += format_real(row[i]);
      }
      out += "\n";
    }
    write(name, out);
  }

  // Tabular data in the configured format: CSV, or a JSON mirror with one
  // object per row keyed by the same column names.
  void table(const std::string& stem, const std::vector<std::string>& columns,
             const std::vector<std::vector<double>>& rows) {
    if (cfg_.format == OutputFormat::csv) {
      csv(stem + ".csv", columns, rows);
      return;
    }
    Json j = envelope(cfg_);
    j["columns"] = columns;
    Json data = Json::array();
    for (const auto& row : rows) {
      Json r = Json::object();
      for (std::size_t i = 0; i < columns.size(); ++i) r[columns[i]] = row[i];
      data.push_back(std::move(r));
    }
    j["rows"] = std::move(data);
    json(stem + ".json", j);
  }

  const std::vector<fs::path>& written() const { return written_; }

 private:
  void write(const std::string& name, const std::string& content) {
    const fs::path path = cfg_.output_path / name;
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open " + path.string() + " for writing");
    f << content;
    f.close();
    if (!f) throw IoError("failed writing " + path.string());
    written_.push_back(path);
  }

  const RunConfig& cfg_;
  std::vector<fs::path> written_;
};

void run_electron(const RunConfig& cfg, Writer& w, std::ostream& log) {
  electron::ElectronParams p;
  p.rho0 = cfg.real("electron.rho0");
  p.u = cfg.real("electron.u");
  p.helicity = cfg.text("electron.helicity") == "-" ? electron::Helicity::minus : electron::Helicity::plus;
  p.phi = cfg.real("electron.phi_deg") * kDeg;
  p.mass = cfg.real("electron.mass");
  p.field_split = cfg.real("electron.field_split");
  p.units = cfg.text("electron.units") == "si" ? electron::UnitSystem::si() : electron::UnitSystem::atomic();
  const auto e = electron::PlaneWaveElectron::create(p);

  const auto rows = electron::profile(e, cfg.real("electron.zmin"), cfg.real("electron.zmax"),
                                      static_cast<int>(cfg.integer("electron.points")),
                                      cfg.real("electron.t"));
  std::vector<std::vector<double>> table;
  table.reserve(rows.size());
  for (const auto& r : rows) {
    table.push_back({r.z, r.t, r.rho, r.omega_kin, r.omega_field, r.S, r.psi_scalar, r.psi_pseudo});
  }
  w.table("electron_profile",
          {"z", "t", "rho", "omega_kin", "omega_field", "S", "psi_scalar", "psi_pseudo"}, table);

  Json s = envelope(cfg);
  s["lambda"] = e.lambda();
  s["nu"] = e.nu();
  s["wavenumber"] = e.wavenumber();
  s["angular_frequency"] = e.angular_frequency();
  s["E0"] = e.E0();
  s["H0"] = e.H0();
  s["S0"] = e.S0();
  s["energy_density"] = 0.5 * e.rho0() * e.u() * e.u();
  s["group_velocity"] = electron::group_velocity(e);
  s["cohesive_potential_ev"] = electron::kCohesivePotentialEv;
  w.json("electron_summary.json", s);
  log << "electron: " << rows.size() << " profile points, lambda = " << format_real(e.lambda()) << "\n";
}

void run_epr(const RunConfig& cfg, Writer& w, std::ostream& log) {
  const std::string& mode = cfg.text("epr.mode");
  const bool all = mode == "all";
  const double delta = cfg.real("epr.delta_deg") * kDeg;

  if (all || mode == "curve") {
    const double step = cfg.real("epr.curve_step_deg");
    const auto count = static_cast<long>(std::ceil(360.0 / step - 1e-9));
    std::vector<std::vector<double>> rows;
    rows.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
      const double deg = step * static_cast<double>(i);
      rows.push_back({deg, epr::expectation({deg * kDeg, 0.0, delta})});
    }
    w.table("epr_curve", {"phi_deg", "E"}, rows);
  }

  if (all || mode == "chsh") {
    const auto& a = cfg.list("epr.angles");
    const epr::ChshSettings c{a[0] * kDeg, a[1] * kDeg, a[2] * kDeg, a[3] * kDeg};
    const auto m = epr::expectation_matrix(c);
    Json j = envelope(cfg);
    j["settings_deg"] = a;
    j["E_matrix"] = {{m[0][0], m[0][1]}, {m[1][0], m[1][1]}};
    j["S"] = epr::chsh_sum(c);
    w.json("chsh.json", j);
    log << "epr: CHSH S = " << format_real(j["S"].get<double>()) << "\n";
  }

  if (all || mode == "singles") {
    const double angle = cfg.real("epr.angle_deg");
    const auto side = cfg.text("epr.side") == "B" ? epr::Side::B : epr::Side::A;
    const auto n = static_cast<std::uint64_t>(cfg.integer("epr.n"));
    const auto workers = static_cast<unsigned>(cfg.integer("epr.workers"));
    const auto r = epr::monte_carlo_singles(angle * kDeg, side, delta, n, cfg.seed, workers);
    Json j = envelope(cfg);
    j["angle_deg"] = angle;
    j["side"] = cfg.text("epr.side");
    j["n"] = r.n;
    j["hits"] = r.hits;
    j["rate"] = r.rate;
    j["stderr"] = r.std_error;
    w.json("singles.json", j);
    log << "epr: singles rate = " << format_real(r.rate) << " (n = " << r.n << ")\n";
  }

  if (all || mode == "pair") {
    const epr::AnalyzerPair s{cfg.real("epr.phi1_deg") * kDeg, cfg.real("epr.phi2_deg") * kDeg, delta};
    const auto t = epr::coincidence_table(s);
    Json j = envelope(cfg);
    j["phi1_deg"] = cfg.real("epr.phi1_deg");
    j["phi2_deg"] = cfg.real("epr.phi2_deg");
    j["delta_deg"] = cfg.real("epr.delta_deg");
    j["coincidence_probability"] = epr::coincidence_probability(s);
    j["coincidences"] = {{"++", t.cpp}, {"--", t.cmm}, {"+-", t.cpm}, {"-+", t.cmp}};
    j["E"] = epr::expectation(s);
    j["B_given_A_plus"] = std::string(epr::to_string(epr::conditional_outcome(epr::Sign::plus, s)));
    j["B_given_A_minus"] = std::string(epr::to_string(epr::conditional_outcome(epr::Sign::minus, s)));
    w.json("pair.json", j);
  }
}

void run_sterngerlach(const RunConfig& cfg, Writer& w, std::ostream& log) {
  const ga3::Vec3 b_dir = ga3::normalized(cfg.vec3("sterngerlach.bdir"));
  const double duration = cfg.real("sterngerlach.duration");
  const double brate = cfg.real("sterngerlach.brate");
  const auto shape = cfg.text("sterngerlach.ramp") == "cosine" ? spin::RampShape::cosine
                                                                : spin::RampShape::linear;
  const auto ramp = spin::FieldRamp::make(shape, b_dir, brate * duration, duration);
  const spin::LLParams params{cfg.real("sterngerlach.kappa"), cfg.vec3("sterngerlach.u"),
                              cfg.real("sterngerlach.dt")};
  const spin::SpinState s0{ga3::normalized(cfg.vec3("sterngerlach.e0")), 1.0};
  const double threshold = cfg.real("sterngerlach.threshold");

  const auto traj = spin::integrate(s0, ramp, params, cfg.integer("sterngerlach.record_every"));
  std::vector<std::vector<double>> rows;
  rows.reserve(traj.size());
  double worst_norm = 0.0;
  for (const auto& p : traj) {
    const auto& e = p.state.e_s;
    rows.push_back({p.t, e.x, e.y, e.z, ga3::dot(e, b_dir)});
    worst_norm = std::max(worst_norm, std::abs(ga3::norm(e) - 1.0));
  }
  w.table("trajectory", {"t", "ex", "ey", "ez", "dot_B"}, rows);

  const auto& last = traj.back().state;
  const auto cls = spin::classify_deflection(last, b_dir, threshold);
  Json j = envelope(cfg);
  j["classification"] = std::string(spin::to_string(cls));
  j["threshold"] = threshold;
  j["kappa"] = params.kappa;
  j["ramp"] = {{"shape", std::string(spin::to_string(shape))},
               {"bdir", {b_dir.x, b_dir.y, b_dir.z}},
               {"brate", brate},
               {"b_max", brate * duration},
               {"duration", duration}};
  j["final_e_s"] = {last.e_s.x, last.e_s.y, last.e_s.z};
  j["final_dot_B"] = ga3::dot(last.e_s, b_dir);
  j["samples"] = traj.size();
  j["max_norm_deviation"] = worst_norm;
  w.json("sterngerlach.json", j);
  log << "sterngerlach: final e_s . B = " << format_real(ga3::dot(last.e_s, b_dir)) << " -> "
      << spin::to_string(cls) << "\n";
}

void run_budget(const RunConfig& cfg, Writer& w, std::ostream& log) {
  uncertainty::BudgetInputs in;
  in.band_energy_mev = cfg.real("budget.band_energy_mev");
  in.lateral_resolution_pm = cfg.real("budget.resolution_pm");
  in.feature_height_pm = cfg.real("budget.feature_pm");
  in.height_error_pm = cfg.real("budget.error_pm");
  in.convention_factor = cfg.real("budget.convention");
  in.mass = cfg.real("budget.mass_kg");
  const auto b = uncertainty::budget_report(in);

  Json j = envelope(cfg);
  j["band_energy_ev"] = b.band_energy_ev;
  j["mass_kg"] = b.mass;
  j["dp"] = b.dp;
  j["dx_pm"] = b.dx_pm;
  j["lateral_resolution_pm"] = b.lateral_resolution_pm;
  j["feature_height_pm"] = b.feature_height_pm;
  j["height_error_pm"] = b.height_error_pm;
  j["relative_error"] = b.relative_error;
  j["compliance_energy_ev"] = b.compliance_energy_ev;
  j["convention_factor"] = b.convention_factor;
  j["contradiction"] = b.contradiction;
  w.json("budget.json", j);

  char buf[512];
  std::snprintf(buf, sizeof buf,
                "uncertainty budget (dx = %g * hbar / dp)\n"
                "  band energy            %12.6g eV\n"
                "  momentum spread dp     %12.6g kg m/s\n"
                "  position spread dx     %12.6g pm\n"
                "  lateral resolution     %12.6g pm\n"
                "  relative height error  %12.6g %%\n"
                "  compliance energy      %12.6g eV\n"
                "  contradiction          %12s\n",
                b.convention_factor, b.band_energy_ev, b.dp, b.dx_pm, b.lateral_resolution_pm,
                100.0 * b.relative_error, b.compliance_energy_ev, b.contradiction ? "yes" : "no");
  log << buf;
}

}  // namespace

std::vector<fs::path> run(const RunConfig& config, std::ostream& log) {
  Writer w(config);
  switch (config.subcommand) {
    case Subcommand::electron: run_electron(config, w, log); break;
    case Subcommand::epr: run_epr(config, w, log); break;
    case Subcommand::sterngerlach: run_sterngerlach(config, w, log); break;
    case Subcommand::budget: run_budget(config, w, log); break;
  }
  return w.written();
}

}  // namespace eelab::cli
