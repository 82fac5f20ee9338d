#ifndef IDEALGB_PARSE_HPP
#define IDEALGB_PARSE_HPP

#include <span>
#include <string>
#include <string_view>

#include "idealgb/polynomial.hpp"

namespace idealgb {

// Polynomial text grammar:
//
//   polynomial := ['+'|'-'] term { ('+'|'-') term }
//   term       := rational | [rational ['*']] factor { ['*'] factor }
//   factor     := variable [ '^' integer ]
//   rational   := integer [ '/' integer ]
//
// Whitespace is insignificant, '^' binds tighter than '*', exponents are
// decimal nonnegative integers, variables are declared identifiers.

/// Parses `text` over the declared variables. Throws ParseError with a
/// 1-based position on syntax errors and unknown variables.
Polynomial parse_polynomial(std::string_view text,
                            std::span<const std::string> variables);

/// Canonical rendering: terms descending under `ord`, signs fused into the
/// coefficients, unit coefficients suppressed, rationals printed as "p/q".
std::string print_polynomial(const Polynomial& p, const MonomialOrdering& ord,
                             std::span<const std::string> variables);

/// "x^2*y" style rendering of a single monomial ("1" for the constant).
std::string print_monomial(const ExponentVector& alpha,
                           std::span<const std::string> variables);

}  // namespace idealgb

#endif
