#include <pybind11/complex.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "eelab/cli/config.hpp"
#include "eelab/cli/run.hpp"
#include "eelab/electron_model.hpp"
#include "eelab/epr_model.hpp"
#include "eelab/error.hpp"
#include "eelab/ga3.hpp"
#include "eelab/spin_dynamics.hpp"
#include "eelab/uncertainty.hpp"

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace py = pybind11;
using namespace eelab;

namespace {

ga3::Vec3 to_vec3(const std::array<double, 3>& a) { return {a[0], a[1], a[2]}; }
std::array<double, 3> from_vec3(const ga3::Vec3& v) { return {v.x, v.y, v.z}; }

void bind_ga3(py::module_& root) {
  auto m = root.def_submodule("ga3", "Geometric algebra of 3-D Euclidean space");
  using ga3::Multivector3;

  py::class_<Multivector3>(m, "Multivector3")
      .def(py::init<>())
      .def(py::init([](const std::array<double, 8>& c) { return Multivector3::from_components(c); }),
           py::arg("components"))
      .def_readwrite("s", &Multivector3::s)
      .def_readwrite("v1", &Multivector3::v1)
      .def_readwrite("v2", &Multivector3::v2)
      .def_readwrite("v3", &Multivector3::v3)
      .def_readwrite("b23", &Multivector3::b23)
      .def_readwrite("b31", &Multivector3::b31)
      .def_readwrite("b12", &Multivector3::b12)
      .def_readwrite("p", &Multivector3::p)
      .def("components", &Multivector3::components)
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(-py::self)
      .def(py::self * double())
      .def(double() * py::self)
      .def(py::self == py::self)
      .def("__mul__", [](const Multivector3& a, const Multivector3& b) { return ga3::gp(a, b); })
      .def("__repr__", [](const Multivector3& a) {
        std::ostringstream ss;
        ss << "Multivector3([";
        const auto c = a.components();
        for (std::size_t i = 0; i < c.size(); ++i) ss << (i ? ", " : "") << c[i];
        ss << "])";
        return ss.str();
      });

  m.attr("one") = ga3::basis::one;
  m.attr("e1") = ga3::basis::e1;
  m.attr("e2") = ga3::basis::e2;
  m.attr("e3") = ga3::basis::e3;
  m.attr("e23") = ga3::basis::e23;
  m.attr("e31") = ga3::basis::e31;
  m.attr("e12") = ga3::basis::e12;
  m.attr("I") = ga3::basis::I;

  m.def("gp", &ga3::gp, "Geometric product");
  m.def("grade", &ga3::grade, py::arg("a"), py::arg("g"));
  m.def("reverse", &ga3::reverse);
  m.def("norm", py::overload_cast<const Multivector3&>(&ga3::norm));

  py::class_<ga3::Rotor3>(m, "Rotor3")
      .def(py::init<>())
      .def_property_readonly("s", &ga3::Rotor3::s)
      .def_property_readonly("b23", &ga3::Rotor3::b23)
      .def_property_readonly("b31", &ga3::Rotor3::b31)
      .def_property_readonly("b12", &ga3::Rotor3::b12)
      .def("as_multivector", &ga3::Rotor3::as_multivector)
      .def("apply", py::overload_cast<const Multivector3&>(&ga3::Rotor3::apply, py::const_))
      .def("apply_vector", [](const ga3::Rotor3& r, const std::array<double, 3>& v) {
        return from_vec3(r.apply(to_vec3(v)));
      });
  m.def("rotor", &ga3::rotor, py::arg("plane"), py::arg("angle"));
}

void bind_electron(py::module_& root) {
  auto m = root.def_submodule("electron", "Extended-electron plane-wave model");
  using namespace electron;

  py::enum_<Helicity>(m, "Helicity").value("plus", Helicity::plus).value("minus", Helicity::minus);

  py::class_<UnitSystem>(m, "UnitSystem")
      .def_readonly("hbar", &UnitSystem::hbar)
      .def_readonly("eps0", &UnitSystem::eps0)
      .def_readonly("mu0", &UnitSystem::mu0)
      .def_static("atomic", &UnitSystem::atomic)
      .def_static("si", &UnitSystem::si);

  py::class_<ElectronParams>(m, "ElectronParams")
      .def(py::init<>())
      .def_readwrite("rho0", &ElectronParams::rho0)
      .def_readwrite("u", &ElectronParams::u)
      .def_readwrite("helicity", &ElectronParams::helicity)
      .def_readwrite("phi", &ElectronParams::phi)
      .def_readwrite("mass", &ElectronParams::mass)
      .def_readwrite("field_split", &ElectronParams::field_split)
      .def_readwrite("units", &ElectronParams::units);

  py::class_<PlaneWaveElectron>(m, "PlaneWaveElectron")
      .def(py::init(&PlaneWaveElectron::create), py::arg("params"))
      .def_property_readonly("rho0", &PlaneWaveElectron::rho0)
      .def_property_readonly("u", &PlaneWaveElectron::u)
      .def_property_readonly("mass", &PlaneWaveElectron::mass)
      .def_property_readonly("lambda_", &PlaneWaveElectron::lambda)
      .def_property_readonly("nu", &PlaneWaveElectron::nu)
      .def_property_readonly("E0", &PlaneWaveElectron::E0)
      .def_property_readonly("H0", &PlaneWaveElectron::H0)
      .def_property_readonly("S0", &PlaneWaveElectron::S0);

  py::class_<WavefunctionSample>(m, "WavefunctionSample")
      .def_readonly("psi", &WavefunctionSample::psi)
      .def_readonly("z", &WavefunctionSample::z)
      .def_readonly("t", &WavefunctionSample::t);

  m.def("density", &density);
  m.def("spin_density", &spin_density);
  m.def("kinetic_energy_density", &kinetic_energy_density);
  m.def("field_energy_density", &field_energy_density);
  m.def("fields", [](const PlaneWaveElectron& e, double z, double t) {
    const auto f = fields(e, z, t);
    return py::make_tuple(f.E, f.H);
  });
  m.def("spin", &electron::spin);
  m.def("total_energy", &total_energy, py::arg("e"), py::arg("volume"));
  m.def("wavefunction", &wavefunction);
  m.def("conj", &conj);
  m.def("schrodinger_wave", &schrodinger_wave);
  m.def("group_velocity", py::overload_cast<const PlaneWaveElectron&>(&group_velocity));
  m.def("ehrenfest_step", [](const PlaneWaveElectron& e, const std::array<double, 3>& grad, double dt) {
    return ehrenfest_step(e, to_vec3(grad), dt);
  });
  m.def("complementarity_check", [](const PlaneWaveElectron& e, double z, double t, double dt) {
    const auto r = complementarity_check(e, z, t, dt);
    return py::make_tuple(r.dS_dt, r.drho_dt);
  });
  m.attr("COHESIVE_POTENTIAL_EV") = kCohesivePotentialEv;
}

void bind_spin(py::module_& root) {
  auto m = root.def_submodule("spin", "Spin direction dynamics under a field ramp");
  using namespace spin;

  m.def("ll_rhs", [](const std::array<double, 3>& e_s, double kappa, const std::array<double, 3>& u,
                     const std::array<double, 3>& dbdt) {
    return from_vec3(ll_rhs({to_vec3(e_s), 1.0}, {kappa, to_vec3(u), 1.0}, to_vec3(dbdt)));
  });
  m.def(
      "integrate",
      [](const std::array<double, 3>& e0, double kappa, const std::array<double, 3>& u,
         const std::array<double, 3>& b_dir, double b_rate, double duration, double dt,
         const std::string& ramp, std::int64_t record_every) {
        const auto shape = ramp == "cosine" ? RampShape::cosine : RampShape::linear;
        const auto r = FieldRamp::make(shape, to_vec3(b_dir), b_rate * duration, duration);
        const auto traj = integrate({to_vec3(e0), 1.0}, r, {kappa, to_vec3(u), dt}, record_every);
        std::vector<std::array<double, 4>> out;
        out.reserve(traj.size());
        for (const auto& p : traj) out.push_back({p.t, p.state.e_s.x, p.state.e_s.y, p.state.e_s.z});
        return out;
      },
      py::arg("e0"), py::arg("kappa"), py::arg("u"), py::arg("b_dir"), py::arg("b_rate"),
      py::arg("duration"), py::arg("dt"), py::arg("ramp") = "linear", py::arg("record_every") = 1,
      "Returns rows (t, ex, ey, ez).");
  m.def(
      "classify_deflection",
      [](const std::array<double, 3>& e_s, const std::array<double, 3>& b_dir, double threshold) {
        return std::string(to_string(classify_deflection({to_vec3(e_s), 1.0}, to_vec3(b_dir), threshold)));
      },
      py::arg("e_s"), py::arg("b_dir"), py::arg("threshold") = kDefaultThreshold);
}

void bind_epr(py::module_& root) {
  auto m = root.def_submodule("epr", "Rotor model of EPR correlations");
  using namespace epr;

  py::enum_<Side>(m, "Side").value("A", Side::A).value("B", Side::B);
  py::enum_<Sign>(m, "Sign").value("plus", Sign::plus).value("minus", Sign::minus);

  py::class_<AnalyzerPair>(m, "AnalyzerPair")
      .def(py::init<double, double, double>(), py::arg("phi1"), py::arg("phi2"), py::arg("delta") = 0.0)
      .def_readwrite("phi1", &AnalyzerPair::phi1)
      .def_readwrite("phi2", &AnalyzerPair::phi2)
      .def_readwrite("delta", &AnalyzerPair::delta);

  py::class_<ChshSettings>(m, "ChshSettings")
      .def(py::init<double, double, double, double>(), py::arg("phi1"), py::arg("phi1p"),
           py::arg("phi2"), py::arg("phi2p"));

  m.def("rotor_phase", &rotor_phase);
  m.def("single_probability", &single_probability);
  m.def("coincidence_probability", &coincidence_probability);
  m.def("coincidence_table", [](const AnalyzerPair& s) {
    const auto t = coincidence_table(s);
    return py::dict(py::arg("cpp") = t.cpp, py::arg("cmm") = t.cmm, py::arg("cpm") = t.cpm,
                    py::arg("cmp") = t.cmp);
  });
  m.def("expectation", &expectation);
  m.def("chsh_sum", &chsh_sum);
  m.def("conditional_outcome", [](Sign a, const AnalyzerPair& s) {
    return std::string(to_string(conditional_outcome(a, s)));
  });
  m.def(
      "monte_carlo_singles",
      [](double angle, Side side, double delta, std::uint64_t n, std::uint64_t seed, unsigned workers) {
        SinglesResult r;
        {
          py::gil_scoped_release release;
          r = monte_carlo_singles(angle, side, delta, n, seed, workers);
        }
        return py::dict(py::arg("n") = r.n, py::arg("hits") = r.hits, py::arg("rate") = r.rate,
                        py::arg("stderr") = r.std_error);
      },
      py::arg("angle"), py::arg("side"), py::arg("delta"), py::arg("n"), py::arg("seed"),
      py::arg("workers") = 1);
}

void bind_uncertainty(py::module_& root) {
  auto m = root.def_submodule("uncertainty", "STM uncertainty budget");
  using namespace uncertainty;

  m.attr("ELECTRON_MASS") = codata::electron_mass;
  m.def("momentum_uncertainty", &momentum_uncertainty, py::arg("band_energy_ev"),
        py::arg("mass") = codata::electron_mass);
  m.def("position_uncertainty", &position_uncertainty, py::arg("dp"),
        py::arg("convention_factor") = kDefaultConvention);
  m.def("relative_feature_error", &relative_feature_error);
  m.def("compliance_energy", &compliance_energy, py::arg("target_dx_pm"),
        py::arg("mass") = codata::electron_mass, py::arg("convention_factor") = kDefaultConvention);
  m.def(
      "budget_report",
      [](double band_energy_mev, double resolution_pm, double feature_pm, double error_pm,
         double convention) {
        const auto b = budget_report({band_energy_mev, codata::electron_mass, resolution_pm, feature_pm,
                                      error_pm, convention});
        return py::dict(py::arg("band_energy_ev") = b.band_energy_ev, py::arg("dp") = b.dp,
                        py::arg("dx_pm") = b.dx_pm, py::arg("relative_error") = b.relative_error,
                        py::arg("compliance_energy_ev") = b.compliance_energy_ev,
                        py::arg("convention_factor") = b.convention_factor,
                        py::arg("contradiction") = b.contradiction);
      },
      py::arg("band_energy_mev") = 80.0, py::arg("resolution_pm") = 20.0, py::arg("feature_pm") = 30.0,
      py::arg("error_pm") = 0.1, py::arg("convention") = kDefaultConvention);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Extended-electron laboratory: geometric algebra, electron model, spin dynamics, EPR, uncertainty";

  // Later registrations are tried first, so derived types come after bases.
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<UnsupportedConfiguration>(m, "UnsupportedConfiguration", PyExc_NotImplementedError);
  auto config_error = py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<cli::ParseError>(m, "ParseError", config_error.ptr());
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  bind_ga3(m);
  bind_electron(m);
  bind_spin(m);
  bind_epr(m);
  bind_uncertainty(m);

  m.def(
      "run_cli",
      [](const std::string& subcommand, const std::string& config_text,
         const std::map<std::string, std::string>& overrides) {
        std::vector<cli::Override> ov;
        for (const auto& [k, v] : overrides) ov.push_back({k, v});
        const auto cfg = cli::parse_config(config_text, ov, cli::parse_subcommand(subcommand));
        std::ostringstream log;
        const auto files = cli::run(cfg, log);
        return py::make_tuple(files, log.str());
      },
      py::arg("subcommand"), py::arg("config_text") = "", py::arg("overrides") = std::map<std::string, std::string>{},
      "Run one batch subcommand; returns (written paths, log text).");

#ifdef EELAB_VERSION_INFO
  m.attr("__version__") = MACRO_STRINGIFY(EELAB_VERSION_INFO);
#else
  m.attr("__version__") = "dev";
#endif
}
