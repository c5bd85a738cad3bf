#pragma once

#include <stdexcept>
#include <string>

namespace pst {

/// Caller handed us malformed data (bad dimensions, out-of-range parameters).
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A mathematical contract was violated (non-unitary operator where a unitary
/// is required, Kraus set that does not resolve the identity, ...).
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

/// A fitting routine could not produce a meaningful result.
struct FitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Experiment configuration problem; remembers the offending field.
struct ConfigError : std::runtime_error {
  std::string field;
  ConfigError(std::string field_, const std::string& message)
      : std::runtime_error("config error [" + field_ + "]: " + message),
        field(std::move(field_)) {}
};

}  // namespace pst
