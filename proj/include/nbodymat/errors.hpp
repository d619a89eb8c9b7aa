#pragma once

#include <stdexcept>
#include <string>

namespace nbodymat {

/// Base class for every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Sizes of inputs do not agree (matrix not square, n mismatch, ...).
struct DimensionError : Error {
    using Error::Error;
};

/// An index or parameter lies outside its admissible range.
struct DomainError : Error {
    using Error::Error;
};

/// Malformed text or JSON input.
struct ParseError : Error {
    using Error::Error;
};

/// Two polynomials built over different variable tables were combined.
struct VarTableMismatch : Error {
    using Error::Error;
};

/// A symbolic computation was requested beyond the configured size cap.
struct ResourceCapExceeded : Error {
    using Error::Error;
};

/// An identity that must hold (a theorem) was found to fail.
/// Seeing this always indicates a bug in the library.
struct VerificationFailure : Error {
    using Error::Error;
};

/// Distances that are not realizable by any point configuration.
struct NotEmbeddable : Error {
    NotEmbeddable(const std::string& what, double eigenvalue)
        : Error(what), min_eigenvalue(eigenvalue) {}
    double min_eigenvalue;
};

}  // namespace nbodymat
