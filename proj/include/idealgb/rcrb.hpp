#ifndef IDEALGB_RCRB_HPP
#define IDEALGB_RCRB_HPP

#include <span>
#include <vector>

#include "idealgb/ordering.hpp"
#include "idealgb/polynomial.hpp"

namespace idealgb {

/// A "reverse" complete reduced basis: linearly independent polynomials
/// where the least monomial of each member occurs in no other member.
/// least_monomials[i] is the least monomial of polys[i].
struct ReverseReducedBasis {
    std::vector<Polynomial> polys;
    std::vector<ExponentVector> least_monomials;
};

/// Transforms linearly independent polynomials into a reverse complete
/// reduced basis by least-monomial elimination, sweeping pivots in input
/// order. Pivot polynomials are never normalized; the raw coefficients are
/// kept. Throws LinearDependenceError(k) (1-based) when polynomial k is
/// eliminated to zero before its pivot step.
ReverseReducedBasis reverse_reduce(std::vector<Polynomial> ps,
                                   const MonomialOrdering& ord);

/// Linear independence plus the least-monomial exclusion condition.
bool is_reverse_reduced(std::span<const Polynomial> ps,
                        const MonomialOrdering& ord);

/// Linear independence plus the leading-monomial exclusion condition.
bool is_complete_reduced(std::span<const Polynomial> ps,
                         const MonomialOrdering& ord);

}  // namespace idealgb

#endif
