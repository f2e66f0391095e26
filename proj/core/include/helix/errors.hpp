#pragma once

#include <stdexcept>
#include <string>

namespace helix {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed textual input (rationals, indices, Chern characters, JSON).
class ParseError : public Error {
public:
    using Error::Error;
};

/// Division by zero, zero denominators and similar arithmetic misuse.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

/// slope() of a rank-zero class.
class ZeroRankError : public Error {
public:
    using Error::Error;
};

/// The three orthogonality conditions do not cut out a line.
class SingularSystemError : public Error {
public:
    using Error::Error;
};

/// The solution line lies inside the rank-zero hyperplane.
class LineAtInfinityError : public Error {
public:
    using Error::Error;
};

/// The lifted perp class is not numerically exceptional.
class NonExceptionalLiftError : public Error {
public:
    using Error::Error;
};

/// Mutation requested on a pair whose pairing is not a positive integer.
class NonPositiveHomError : public Error {
public:
    using Error::Error;
};

/// A 4-tuple that violates the foundation invariants.
class InvalidFoundationError : public Error {
public:
    using Error::Error;
};

/// An index outside the domain of the requested operation.
class InvalidIndexError : public Error {
public:
    using Error::Error;
};

/// dot(alpha, beta) evaluated at its pole 3 + alpha - beta = 0.
class PoleInDotError : public Error {
public:
    using Error::Error;
};

/// A (r, mu, Delta) triple whose Euler characteristic or Chern classes
/// are not integers.
class NonIntegralCharacterError : public Error {
public:
    using Error::Error;
};

}  // namespace helix
