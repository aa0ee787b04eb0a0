#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace uniprod {

// Base for everything the engine can throw on purpose. Anything else
// escaping the library is a bug.
struct EngineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed textual input. `column` is a 1-based position in the input.
struct ParseError : EngineError {
    std::size_t column;
    ParseError(const std::string& msg, std::size_t col)
        : EngineError("parse error at column " + std::to_string(col) + ": " + msg),
          column(col) {}
};

// A configured size cap was exceeded (letter counts, word lengths,
// partition sizes, constraint-system dimensions).
struct SizeLimitError : EngineError {
    using EngineError::EngineError;
};

// Pattern cannot support a mixed-moment ansatz (fewer than two algebras).
struct DegeneratePatternError : EngineError {
    using EngineError::EngineError;
};

// A required shape has no solved rule in the staging context.
struct StagingError : EngineError {
    std::string shape;
    StagingError(const std::string& msg, std::string shape_key)
        : EngineError(msg), shape(std::move(shape_key)) {}
};

// Partial-order violation in partition lattice queries.
struct OrderError : EngineError {
    using EngineError::EngineError;
};

// Moment/cumulant table is missing a required order.
struct MissingOrderError : EngineError {
    using EngineError::EngineError;
};

// Branch normalization asked for on a branch with nonempty residual.
struct NotFullySolvedError : EngineError {
    using EngineError::EngineError;
};

// Rule evaluation hit a moment symbol absent from the limits table.
struct IncompleteLimitsError : EngineError {
    using EngineError::EngineError;
};

// Monte Carlo instance cannot separate (or match) the candidate values.
struct InconclusiveInstanceError : EngineError {
    using EngineError::EngineError;
};

// Case analysis exceeded the branch cap.
struct BranchOverflowError : EngineError {
    using EngineError::EngineError;
};

// A built-in reference derivation failed one of its pinned checkpoints.
struct AssertionDiff : EngineError {
    using EngineError::EngineError;
};

// Post-condition violation inside the engine itself.
struct InternalError : EngineError {
    using EngineError::EngineError;
};

}  // namespace uniprod
