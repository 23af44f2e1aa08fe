#pragma once

#include <stdexcept>
#include <string>

namespace springer {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Column lengths do not describe a two-column diagram (s > r or negative).
class ShapeError : public Error {
public:
    using Error::Error;
};

// Malformed tableau literal text.
class ParseError : public Error {
public:
    using Error::Error;
};

// Structurally invalid tableau: wrong shape, not a bijection onto 1..n,
// a non-increasing row, or an operation whose result would be invalid.
class ValidityError : public Error {
public:
    using Error::Error;
};

// An index or entry outside its documented range.
class IndexError : public Error {
public:
    using Error::Error;
};

// Matrix dimensions incompatible with the requested operation.
class DimensionError : public Error {
public:
    using Error::Error;
};

// An internal invariant failed; indicates a bug, not bad input.
class InternalError : public Error {
public:
    using Error::Error;
};

// The seeded random stream kept producing singular centralizer samples.
class DegenerateSampleError : public Error {
public:
    using Error::Error;
};

// A certificate step broke an invariant that the construction guarantees;
// signals an implementation bug in the chain builders.
class ProofViolationError : public Error {
public:
    using Error::Error;
};

} // namespace springer
