#ifndef IDEALGB_GBUILDER_HPP
#define IDEALGB_GBUILDER_HPP

#include <optional>
#include <vector>

#include "idealgb/certificate.hpp"
#include "idealgb/functional.hpp"
#include "idealgb/staircase.hpp"

namespace idealgb {

/// The computed reduced Groebner basis of a vanishing ideal, together with
/// the quotient-ring monomial basis. Basis elements are monic, sorted by
/// ascending leading monomial; basis[i]'s leading monomial is
/// leading_monomials[i] and every tail monomial lies in quotient_basis.
struct GroebnerResult {
    MonomialOrdering ordering;
    LowerSet quotient_basis;
    std::vector<ExponentVector> leading_monomials;
    std::vector<Polynomial> basis;
    std::optional<Certificate> certificate;
};

/// Reduced Groebner basis of the ideal of polynomials vanishing at the
/// given pairwise-distinct points.
GroebnerResult groebner_lagrange(const std::vector<Point>& points,
                                 const MonomialOrdering& ord);

/// Reduced Groebner basis for general ideal-interpolation conditions.
/// Validates D-invariance of every condition space unless told to skip.
GroebnerResult groebner_hermite(const InterpolationProblem& problem,
                                bool skip_d_invariance = false);

/// Exposed pipeline core: conditions are already at the origin.
GroebnerResult groebner_from_shifted(std::vector<Polynomial> conditions,
                                     const MonomialOrdering& ord);

/// The unique polynomial supported on the quotient basis whose functional
/// values are `values` (in the problem's flattened condition order).
Polynomial interpolate(const InterpolationProblem& problem,
                       const std::vector<Rational>& values);

}  // namespace idealgb

#endif
