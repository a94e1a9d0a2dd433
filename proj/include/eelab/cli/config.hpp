#pragma once

// Run configuration for the batch front end.
//
// Config files are line oriented:
//
//   # comment
//   seed = 7
//   epr.phi1_deg = 0
//   sterngerlach.u = 0, 0, 1
//
// Every key has a type and a documented default (see `schema()`); unknown
// keys are rejected. Overrides (from command-line flags) are applied after
// the file, so they win.

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "eelab/error.hpp"
#include "eelab/ga3.hpp"

namespace eelab::cli {

enum class Subcommand { electron, epr, sterngerlach, budget };
enum class OutputFormat { csv, json };

std::string_view to_string(Subcommand s);
Subcommand parse_subcommand(std::string_view name);

class ParseError : public ConfigError {
 public:
  ParseError(const std::string& what, int line) : ConfigError(what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

enum class ValueKind { real, integer, text, choice, real_list };

struct KeySpec {
  std::string key;
  ValueKind kind;
  std::string default_value;
  std::string help;
  // choice: allowed spellings. real_list: required length (0 = any).
  std::vector<std::string> choices{};
  std::size_t list_length = 0;
  // real: must be > 0. integer: must be >= min_integer.
  bool positive = false;
  std::int64_t min_integer = 0;
};

// All recognised keys, in a fixed order.
std::span<const KeySpec> schema();

using Value = std::variant<double, std::int64_t, std::string, std::vector<double>>;

struct Override {
  std::string key;
  std::string value;
};

struct RunConfig {
  Subcommand subcommand = Subcommand::budget;
  std::map<std::string, Value> params;
  std::filesystem::path output_path;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::csv;

  double real(const std::string& key) const;
  std::int64_t integer(const std::string& key) const;
  const std::string& text(const std::string& key) const;
  const std::vector<double>& list(const std::string& key) const;
  ga3::Vec3 vec3(const std::string& key) const;

  // Keys relevant to this run (globals plus the subcommand's section), in
  // schema order, as canonical text.
  std::vector<std::pair<std::string, std::string>> resolved() const;
};

// Throws ParseError for malformed lines and ConfigError (naming the key) for
// unknown keys or values that fail validation.
RunConfig parse_config(std::string_view file_text, const std::vector<Override>& overrides,
                       Subcommand subcommand);

// Canonical text of a value: reals with 17 significant digits.
std::string format_value(const Value& v);
std::string format_real(double x);

}  // namespace eelab::cli
