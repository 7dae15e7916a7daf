#pragma once
#include <stdexcept>
#include <string>

namespace iho {

// Error taxonomy, mapped onto CLI exit codes by the runner:
//   ConfigError / InvalidInputError -> 2, NumericalGuardError -> 3, IoError -> 4.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad config file, unknown key, missing required field, malformed CLI usage.
struct ConfigError : Error {
    using Error::Error;
};

// Precondition violation on a library call (wrong dims, non-Hermitian input,
// unnormalized state, non-power-of-two grid, ...).
struct InvalidInputError : Error {
    using Error::Error;
};

// Runtime guard tripped: norm drift, boundary density, truncation overflow,
// unrepresentable wave packet, step size too coarse.
struct NumericalGuardError : Error {
    using Error::Error;
};

// Filesystem failure while writing outputs.
struct IoError : Error {
    using Error::Error;
};

}  // namespace iho
