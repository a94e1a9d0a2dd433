#include "eelab/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace eelab::cli {

namespace {

using VK = ValueKind;

const std::vector<KeySpec>& key_table() {
  static const std::vector<KeySpec> table = {
      {"seed", VK::integer, "12345", "random seed for Monte Carlo runs"},
      {"out", VK::text, "eelab_out", "output directory"},
      {"format", VK::choice, "csv", "tabular output format", {"csv", "json"}},

      {"electron.rho0", VK::real, "1", "mass-density amplitude", {}, 0, true},
      {"electron.u", VK::real, "1", "mechanical velocity", {}, 0, true},
      {"electron.helicity", VK::choice, "+", "spin parallel (+) or antiparallel (-) to motion", {"+", "-"}},
      {"electron.phi_deg", VK::real, "90", "field phase in degrees"},
      {"electron.mass", VK::real, "1", "inertial mass", {}, 0, true},
      {"electron.field_split", VK::real, "0.5", "electric share of the field energy"},
      {"electron.units", VK::choice, "atomic", "unit system", {"atomic", "si"}},
      {"electron.zmin", VK::real, "0", "profile window start"},
      {"electron.zmax", VK::real, "6.2831853071795862", "profile window end"},
      {"electron.points", VK::integer, "201", "profile sample count", {}, 0, false, 1},
      {"electron.t", VK::real, "0", "profile time"},

      {"epr.mode", VK::choice, "all", "which EPR artifacts to produce",
       {"all", "curve", "chsh", "singles", "pair"}},
      {"epr.phi1_deg", VK::real, "0", "analyzer angle at A"},
      {"epr.phi2_deg", VK::real, "0", "analyzer angle at B"},
      {"epr.delta_deg", VK::real, "0", "source phase difference"},
      {"epr.angles", VK::real_list, "0,45,22.5,67.5", "CHSH settings phi1,phi1',phi2,phi2' in degrees",
       {}, 4},
      {"epr.curve_step_deg", VK::real, "1", "correlation curve spacing", {}, 0, true},
      {"epr.angle_deg", VK::real, "0", "singles analyzer angle"},
      {"epr.side", VK::choice, "A", "singles detector", {"A", "B"}},
      {"epr.n", VK::integer, "1000000", "singles trial count", {}, 0, false, 1},
      {"epr.workers", VK::integer, "1", "singles worker threads", {}, 0, false, 1},

      {"sterngerlach.kappa", VK::real, "1", "coupling constant"},
      {"sterngerlach.u", VK::real_list, "0,0,1", "electron velocity", {}, 3},
      {"sterngerlach.bdir", VK::real_list, "1,0,0", "field direction (normalized on use)", {}, 3},
      {"sterngerlach.brate", VK::real, "1", "ramp rate: final field is brate * duration"},
      {"sterngerlach.ramp", VK::choice, "linear", "ramp shape", {"linear", "cosine"}},
      {"sterngerlach.duration", VK::real, "1", "ramp duration", {}, 0, true},
      {"sterngerlach.dt", VK::real, "0.001", "integrator step", {}, 0, true},
      {"sterngerlach.e0", VK::real_list, "0,0,1", "initial spin direction (normalized on use)", {}, 3},
      {"sterngerlach.threshold", VK::real, "0.99", "classification threshold", {}, 0, true},
      {"sterngerlach.record_every", VK::integer, "1", "trajectory sampling stride", {}, 0, false, 1},

      {"budget.band_energy_mev", VK::real, "80", "band energy in meV", {}, 0, true},
      {"budget.resolution_pm", VK::real, "20", "lateral resolution in pm", {}, 0, true},
      {"budget.feature_pm", VK::real, "30", "feature height in pm", {}, 0, true},
      {"budget.error_pm", VK::real, "0.1", "height error in pm", {}, 0, true},
      {"budget.convention", VK::real, "0.5", "prefactor c in dx = c hbar / dp", {}, 0, true},
      {"budget.mass_kg", VK::real, "9.10938370e-31", "particle mass", {}, 0, true},
  };
  return table;
}

const KeySpec* find_spec(std::string_view key) {
  const auto& t = key_table();
  auto it = std::find_if(t.begin(), t.end(), [&](const KeySpec& k) { return k.key == key; });
  return it == t.end() ? nullptr : &*it;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return !s.empty() && ec == std::errc{} && ptr == end && std::isfinite(out);
}

[[noreturn]] void invalid(const KeySpec& spec, std::string_view raw, const std::string& why) {
  throw ConfigError("invalid value '" + std::string(raw) + "' for " + spec.key + ": " + why, spec.key);
}

Value convert(const KeySpec& spec, std::string_view raw) {
  const std::string_view s = trim(raw);
  switch (spec.kind) {
    case VK::real: {
      double x = 0.0;
      if (!parse_double(s, x)) invalid(spec, s, "expected a finite real number");
      if (spec.positive && !(x > 0.0)) invalid(spec, s, "must be > 0");
      return x;
    }
    case VK::integer: {
      std::int64_t x = 0;
      const auto* end = s.data() + s.size();
      auto [ptr, ec] = std::from_chars(s.data(), end, x);
      if (s.empty() || ec != std::errc{} || ptr != end) invalid(spec, s, "expected an integer");
      if (x < spec.min_integer) invalid(spec, s, "must be >= " + std::to_string(spec.min_integer));
      return x;
    }
    case VK::text:
      if (s.empty()) invalid(spec, s, "must not be empty");
      return std::string(s);
    case VK::choice: {
      if (std::find(spec.choices.begin(), spec.choices.end(), s) == spec.choices.end()) {
        std::string allowed;
        for (const auto& c : spec.choices) allowed += (allowed.empty() ? "" : "|") + c;
        invalid(spec, s, "expected one of " + allowed);
      }
      return std::string(s);
    }
    case VK::real_list: {
      std::vector<double> xs;
      std::string_view rest = s;
      while (true) {
        const auto comma = rest.find(',');
        double x = 0.0;
        if (!parse_double(rest.substr(0, comma), x)) invalid(spec, s, "expected comma-separated reals");
        xs.push_back(x);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
      }
      if (spec.list_length != 0 && xs.size() != spec.list_length) {
        invalid(spec, s, "expected " + std::to_string(spec.list_length) + " values");
      }
      return xs;
    }
  }
  invalid(spec, s, "unsupported kind");
}

template <class T>
const T& get_as(const std::map<std::string, Value>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw ConfigError("missing configuration key " + key, key);
  const T* v = std::get_if<T>(&it->second);
  if (!v) throw ConfigError("configuration key " + key + " has a different type", key);
  return *v;
}

bool in_section(std::string_view key, Subcommand sub) {
  const auto dot = key.find('.');
  if (dot == std::string_view::npos) return true;
  return key.substr(0, dot) == to_string(sub);
}

}  // namespace

std::string_view to_string(Subcommand s) {
  switch (s) {
    case Subcommand::electron: return "electron";
    case Subcommand::epr: return "epr";
    case Subcommand::sterngerlach: return "sterngerlach";
    case Subcommand::budget: break;
  }
  return "budget";
}

Subcommand parse_subcommand(std::string_view name) {
  for (auto s : {Subcommand::electron, Subcommand::epr, Subcommand::sterngerlach, Subcommand::budget}) {
    if (to_string(s) == name) return s;
  }
  throw ConfigError("unknown subcommand '" + std::string(name) + "'");
}

std::span<const KeySpec> schema() { return key_table(); }

std::string format_real(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string format_value(const Value& v) {
  struct Visitor {
    std::string operator()(double x) const { return format_real(x); }
    std::string operator()(std::int64_t x) const { return std::to_string(x); }
    std::string operator()(const std::string& s) const { return s; }
    std::string operator()(const std::vector<double>& xs) const {
      std::string out;
      for (double x : xs) out += (out.empty() ? "" : ",") + format_real(x);
      return out;
    }
  };
  return std::visit(Visitor{}, v);
}

double RunConfig::real(const std::string& key) const { return get_as<double>(params, key); }
std::int64_t RunConfig::integer(const std::string& key) const {
  return get_as<std::int64_t>(params, key);
}
const std::string& RunConfig::text(const std::string& key) const {
  return get_as<std::string>(params, key);
}
const std::vector<double>& RunConfig::list(const std::string& key) const {
  return get_as<std::vector<double>>(params, key);
}
ga3::Vec3 RunConfig::vec3(const std::string& key) const {
  const auto& xs = list(key);
  if (xs.size() != 3) throw ConfigError(key + " must have 3 components", key);
  return {xs[0], xs[1], xs[2]};
}

std::vector<std::pair<std::string, std::string>> RunConfig::resolved() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& spec : key_table()) {
    if (!in_section(spec.key, subcommand)) continue;
    out.emplace_back(spec.key, format_value(params.at(spec.key)));
  }
  return out;
}

RunConfig parse_config(std::string_view file_text, const std::vector<Override>& overrides,
                       Subcommand subcommand) {
  std::map<std::string, std::string> raw;
  for (const auto& spec : key_table()) raw[spec.key] = spec.default_value;

  int line_no = 0;
  while (!file_text.empty()) {
    ++line_no;
    const auto nl = file_text.find('\n');
    std::string_view line = file_text.substr(0, nl);
    file_text = nl == std::string_view::npos ? std::string_view{} : file_text.substr(nl + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'key = value'", line_no);
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError("line " + std::to_string(line_no) + ": missing key", line_no);
    if (!find_spec(key)) {
      throw ParseError("line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'",
                       line_no);
    }
    raw[std::string(key)] = std::string(value);
  }

  for (const auto& o : overrides) {
    if (!find_spec(o.key)) throw ConfigError("unknown key '" + o.key + "'", o.key);
    raw[o.key] = o.value;
  }

  RunConfig cfg;
  cfg.subcommand = subcommand;
  for (const auto& spec : key_table()) cfg.params[spec.key] = convert(spec, raw[spec.key]);

  const auto seed = cfg.integer("seed");
  if (seed < 0) throw ConfigError("seed must be non-negative", "seed");
  cfg.seed = static_cast<std::uint64_t>(seed);
  cfg.output_path = cfg.text("out");
  cfg.format = cfg.text("format") == "json" ? OutputFormat::json : OutputFormat::csv;
  return cfg;
}

}  // namespace eelab::cli
