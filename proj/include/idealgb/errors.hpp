#ifndef IDEALGB_ERRORS_HPP
#define IDEALGB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace idealgb {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two values of different ambient dimension were combined.
struct DimensionMismatchError : Error {
    explicit DimensionMismatchError(const std::string& what) : Error(what) {}
};

/// A leading/least monomial was requested of the zero polynomial.
struct ZeroPolynomialError : Error {
    explicit ZeroPolynomialError(const std::string& what) : Error(what) {}
};

/// Text input could not be parsed. `position` is a 1-based offset into
/// the offending string (or byte offset into a file).
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

/// The input polynomials were linearly dependent: the pivot polynomial
/// became zero before step `index` (1-based) of the elimination.
struct LinearDependenceError : Error {
    explicit LinearDependenceError(int index)
        : Error("input polynomials are linearly dependent (polynomial " +
                std::to_string(index) + " was eliminated to zero)"),
          index(index) {}
    int index;
};

/// The least monomials of a reduced basis do not form a lower set.
struct MalformedConditionsError : Error {
    explicit MalformedConditionsError(const std::string& monomial)
        : Error("quotient basis is not downward closed: missing a divisor of " +
                monomial),
          monomial(monomial) {}
    std::string monomial;
};

/// A condition space is not closed under partial differentiation.
struct DInvarianceViolationError : Error {
    DInvarianceViolationError(int condition_index, int generator_index,
                              int variable_index)
        : Error("condition space " + std::to_string(condition_index + 1) +
                " is not D-invariant: derivative of generator " +
                std::to_string(generator_index + 1) + " w.r.t. variable " +
                std::to_string(variable_index + 1) + " escapes the span"),
          condition_index(condition_index),
          generator_index(generator_index),
          variable_index(variable_index) {}
    int condition_index;
    int generator_index;
    int variable_index;
};

/// Two interpolation points coincide.
struct DuplicatePointError : Error {
    explicit DuplicatePointError(const std::string& point)
        : Error("duplicate interpolation point " + point), point(point) {}
    std::string point;
};

/// The problem description is structurally unusable (e.g. no conditions).
struct InvalidProblemError : Error {
    explicit InvalidProblemError(const std::string& what) : Error(what) {}
};

}  // namespace idealgb

#endif
