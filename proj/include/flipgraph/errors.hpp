#pragma once

#include <stdexcept>
#include <string>

namespace flipgraph {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed point configuration.
struct ConfigError : Error {
    using Error::Error;
};

// Arc or triangulation argument does not satisfy a precondition.
struct PreconditionError : Error {
    using Error::Error;
};

// A construction would need an arc through a flat vertex or puncture.
struct ObstructionError : Error {
    using Error::Error;
};

// Node or path cap reached.
struct ResourceError : Error {
    using Error::Error;
};

// An internal invariant failed; indicates a bug or a refuted claim.
struct InvariantError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace flipgraph
