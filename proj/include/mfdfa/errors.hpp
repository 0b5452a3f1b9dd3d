#pragma once

#include <stdexcept>

namespace mfdfa {

// Error categories map onto the CLI exit codes:
//   InputError -> 1, ConfigError -> 2, DegenerateError -> 3.

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical degeneracy: vanished box fluctuations, zero-variance series,
// filters that eliminate every point.
struct DegenerateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace mfdfa
