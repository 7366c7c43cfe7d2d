// Error types shared by all confhom modules.

#pragma once

#include <stdexcept>
#include <string>

namespace confhom {

/// Base class of all errors thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input outside an operation's mathematical domain (zero where nonzero
/// required, rank-deficient matrix, composite where prime required, ...).
struct DomainError : Error {
    using Error::Error;
};

/// Valid request that this build does not support (e.g. discrete logs for
/// p >= 2^16, dilogarithm evaluation over F_p).
struct UnsupportedError : Error {
    using Error::Error;
};

/// homology_of_pair called on matrices with B*A != 0.
struct CompositionError : Error {
    using Error::Error;
};

/// Arithmetic on values tagged with different (field, r, n).
struct MixError : Error {
    using Error::Error;
};

/// Face of a configuration would drop below the truncation level n = r.
struct RankError : Error {
    using Error::Error;
};

/// Rejection sampling failed to produce an admissible configuration.
struct GenerationError : Error {
    using Error::Error;
};

/// Enumeration or matrix size exceeds the configured budget.
struct BudgetError : Error {
    using Error::Error;
};

/// Cross-ratio of a degenerate (proportional) point tuple.
struct DegenerateError : Error {
    using Error::Error;
};

/// Chain document contains a non-admissible generator.
struct AdmissibilityError : Error {
    using Error::Error;
};

/// Malformed chain document or field element string.
struct ParseError : Error {
    using Error::Error;
};

} // namespace confhom
