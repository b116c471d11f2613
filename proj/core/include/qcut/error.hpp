#pragma once

#include <stdexcept>
#include <string>

namespace qcut {

/// Base class for all qcut failures.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input: circuit documents, observables, flags, config files.
struct ConfigError : Error {
    using Error::Error;
};

/// A cut search found no candidate satisfying the hard constraints.
struct InfeasibleError : Error {
    using Error::Error;
};

/// A job could not be executed: unroutable, backend unreachable, worker fault.
struct ExecutionError : Error {
    using Error::Error;
};

} // namespace qcut
