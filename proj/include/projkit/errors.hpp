#pragma once

#include <stdexcept>
#include <string>

namespace projkit {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Mismatched or invalid dimensions, empty inputs, malformed structures.
struct DimensionError : Error {
    using Error::Error;
};

/// Angle requested between vectors where at least one is zero.
struct DegenerateAngleError : Error {
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

/// Non-finite value produced or supplied where finite reals are required.
struct NumericError : Error {
    using Error::Error;
};

/// Root finder could not bracket a stationary point.
struct BracketError : Error {
    using Error::Error;
};

/// A generated fixture failed its construction-time validation.
struct ConstructionError : Error {
    using Error::Error;
};

/// Rate fit requested on a trace classified as non-convergent.
struct NotConvergedError : Error {
    using Error::Error;
};

/// Too few usable points left after windowing for a fit.
struct WindowError : Error {
    using Error::Error;
};

/// Probe could not draw enough admissible samples.
struct SamplingError : Error {
    using Error::Error;
};

/// Unknown name in a registry lookup.
struct LookupError : Error {
    using Error::Error;
};

/// Invalid experiment configuration or serialized file.
struct ConfigError : Error {
    using Error::Error;
};

/// Estimate requested over a trace with no admissible building blocks.
struct NoBlocksError : Error {
    using Error::Error;
};

}  // namespace projkit
