#pragma once

#include <stdexcept>
#include <string>

namespace eelab {

// Input outside the mathematical domain of an operation (bad grade index,
// non-unit rotor plane, non-positive energy, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A closed form was requested for a configuration it does not cover,
// e.g. the spin formula away from phi = pi/2.
class UnsupportedConfiguration : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Bad run configuration: malformed config text, unknown key, type mismatch,
// out-of-range integrator settings.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what, std::string key = {})
      : std::runtime_error(what), key_(std::move(key)) {}

  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eelab
