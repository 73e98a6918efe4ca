#pragma once

#include <stdexcept>
#include <string>

namespace exactgm {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Problem dimension outside the supported range (e.g. n < 2).
struct InvalidDimensionError : Error {
    using Error::Error;
};

/// Perturbation magnitude outside (0, 1/n).
struct PerturbationRangeError : Error {
    using Error::Error;
};

/// The selected columns do not form a nonsingular basis.
struct NotABasisError : Error {
    using Error::Error;
};

/// The solution is not a 0/1 permutation-matrix vertex.
struct NotAVertexError : Error {
    using Error::Error;
};

/// delta outside the open interval (0, 1).
struct InvalidDeltaError : Error {
    using Error::Error;
};

/// A stated hypothesis of a sensitivity bound is violated by the input.
struct HypothesisViolationError : Error {
    using Error::Error;
};

/// The solver was handed a degenerate (unperturbed) system.
struct DegeneracyHazardError : Error {
    using Error::Error;
};

/// Input too large for an exhaustive operation.
struct SizeLimitError : Error {
    using Error::Error;
};

struct DimensionMismatchError : Error {
    using Error::Error;
};

/// An exactness guarantee failed internally; indicates a bug, not bad input.
struct InternalConsistencyError : Error {
    using Error::Error;
};

/// Malformed input text; carries the 1-based line number when known.
struct ParseError : Error {
    explicit ParseError(const std::string& msg, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_number(line) {}

    int line_number;
};

}  // namespace exactgm
