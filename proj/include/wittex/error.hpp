#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wittex {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when textual input (scalar, polynomial, JSON payload, CLI argument)
// cannot be parsed.  `offset` is the byte position of the first offending
// character within the input fragment, when known.
struct ParseError : Error {
    std::size_t offset;
    explicit ParseError(const std::string& what, std::size_t off = 0)
        : Error(what + " (at offset " + std::to_string(off) + ")"), offset(off) {}
};

// Mixing values from two different quadratic extensions, e.g. sqrt(2) with
// sqrt(19), in one arithmetic expression.
struct IncompatibleField : Error {
    using Error::Error;
};

// A quadratic radicand that is 0, 1 or not squarefree.
struct NotSquarefree : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

// Input that is structurally valid but mathematically unusable in context
// (degenerate parameters, empty systems, comparisons over imaginary fields).
struct DegenerateInput : Error {
    using Error::Error;
};

// A claimed equivalence witness that does not actually transform one cocycle
// into the other.
struct InvalidCoboundary : Error {
    using Error::Error;
};

// A verification window too small to contain any constraint instance.
struct WindowTooSmall : Error {
    using Error::Error;
};

// A value whose shape has no representation in the interchange schema.
struct SerializationError : Error {
    using Error::Error;
};

// An internal cross-check that must hold for every input failed; indicates a
// defect in the computation itself rather than in the caller's data.
struct ConsistencyError : Error {
    using Error::Error;
};

}  // namespace wittex
