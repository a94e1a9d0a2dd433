#include <doctest.h>

#include <string>

#include "eelab/cli/config.hpp"
#include "eelab/error.hpp"

using namespace eelab::cli;

TEST_CASE("defaults") {
  const auto cfg = parse_config("", {}, Subcommand::epr);
  CHECK(cfg.subcommand == Subcommand::epr);
  CHECK(cfg.seed == 12345);
  CHECK(cfg.format == OutputFormat::csv);
  CHECK(cfg.output_path == "eelab_out");
  CHECK(cfg.real("epr.phi1_deg") == 0.0);
  CHECK(cfg.list("epr.angles") == std::vector<double>{0, 45, 22.5, 67.5});
  CHECK(cfg.integer("epr.n") == 1000000);
  CHECK(cfg.text("epr.mode") == "all");
  CHECK(cfg.real("budget.convention") == 0.5);
  CHECK(cfg.real("sterngerlach.kappa") == 1.0);
  CHECK(cfg.vec3("sterngerlach.u") == eelab::ga3::Vec3{0, 0, 1});
  CHECK(cfg.integer("electron.points") == 201);
  // Every schema key is present.
  for (const auto& spec : schema()) CHECK(cfg.params.count(spec.key) == 1);
}

TEST_CASE("file values and override precedence") {
  const std::string text =
      "# sample\n"
      "\n"
      "epr.phi1_deg = 0   # trailing comment\n"
      "  seed=7\n"
      "format = json\n"
      "sterngerlach.u = 1, 0, 0\n";
  const auto file_only = parse_config(text, {}, Subcommand::epr);
  CHECK(file_only.real("epr.phi1_deg") == 0.0);
  CHECK(file_only.seed == 7);
  CHECK(file_only.format == OutputFormat::json);
  CHECK(file_only.vec3("sterngerlach.u") == eelab::ga3::Vec3{1, 0, 0});

  const auto both = parse_config(text, {{"epr.phi1_deg", "45"}, {"seed", "9"}}, Subcommand::epr);
  CHECK(both.real("epr.phi1_deg") == 45.0);
  CHECK(both.seed == 9);

  // The last override wins.
  const auto twice = parse_config("", {{"epr.n", "10"}, {"epr.n", "20"}}, Subcommand::epr);
  CHECK(twice.integer("epr.n") == 20);
}

TEST_CASE("malformed lines report their line number") {
  try {
    parse_config("seed = 1\n\nthis is not a pair\n", {}, Subcommand::budget);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config("= 3\n", {}, Subcommand::budget), ParseError);
  try {
    parse_config("seed = 1\nepr.bogus = 2\n", {}, Subcommand::epr);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("type errors name the key") {
  try {
    parse_config("epr.phi1_deg = banana\n", {}, Subcommand::epr);
    FAIL("expected ConfigError");
  } catch (const eelab::ConfigError& e) {
    CHECK(e.key() == "epr.phi1_deg");
    CHECK(std::string(e.what()).find("epr.phi1_deg") != std::string::npos);
  }
  const auto key_of = [](const std::vector<Override>& o) {
    try {
      parse_config("", o, Subcommand::epr);
    } catch (const eelab::ConfigError& e) {
      return e.key();
    }
    return std::string("<none>");
  };
  CHECK(key_of({{"electron.points", "0"}}) == "electron.points");
  CHECK(key_of({{"electron.points", "2.5"}}) == "electron.points");
  CHECK(key_of({{"electron.helicity", "up"}}) == "electron.helicity");
  CHECK(key_of({{"epr.angles", "1,2,3"}}) == "epr.angles");
  CHECK(key_of({{"sterngerlach.dt", "-1"}}) == "sterngerlach.dt");
  CHECK(key_of({{"sterngerlach.u", "1,x,0"}}) == "sterngerlach.u");
  CHECK(key_of({{"format", "xml"}}) == "format");
  CHECK(key_of({{"seed", "-4"}}) == "seed");
  CHECK(key_of({{"epr.nope", "1"}}) == "epr.nope");
  CHECK(key_of({{"epr.n", "5"}}) == "<none>");
}

TEST_CASE("resolved config lists globals and the active section") {
  const auto cfg = parse_config("", {{"budget.convention", "1"}}, Subcommand::budget);
  const auto r = cfg.resolved();
  REQUIRE(!r.empty());
  CHECK(r.front().first == "seed");
  bool saw = false;
  for (const auto& [k, v] : r) {
    CHECK((k.rfind("budget.", 0) == 0 || k.find('.') == std::string::npos));
    if (k == "budget.convention") {
      CHECK(v == "1");
      saw = true;
    }
  }
  CHECK(saw);
}

TEST_CASE("subcommand names and real formatting") {
  CHECK(parse_subcommand("sterngerlach") == Subcommand::sterngerlach);
  CHECK(to_string(Subcommand::electron) == "electron");
  CHECK_THROWS_AS(parse_subcommand("cat"), eelab::ConfigError);
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(format_real(2.0) == "2");
  CHECK(std::stod(format_real(1.0 / 3.0)) == 1.0 / 3.0);
}
