#ifndef IDEALGB_ORACLE_HPP
#define IDEALGB_ORACLE_HPP

#include <span>
#include <vector>

#include "idealgb/gbuilder.hpp"

namespace idealgb {

// Independent verification of Groebner results. Everything here shares
// only the polynomial arithmetic layer with the elimination pipeline.

struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

/// Multivariate division: f = sum q_i d_i + r where no monomial of r is
/// divisible by any divisor's leading monomial. Divisors must be nonzero.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors,
                      const MonomialOrdering& ord);

/// The S-polynomial of two nonzero polynomials.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrdering& ord);

/// Structural certification: every S-pair reduces to zero (pairs with
/// coprime leading monomials are counted but skipped by Buchberger's first
/// criterion), elements monic, tails inside the quotient basis, leading
/// monomials pairwise minimal. Failures are recorded, never thrown.
Certificate is_reduced_groebner(const GroebnerResult& result);

/// (P(D) f)(theta) by symbolic differentiation and direct substitution;
/// does not go through apply_functional.
Rational apply_condition_at_point(const Point& theta, const Polynomial& p,
                                  const Polynomial& f);

/// Structural certification plus annihilation of every basis element by
/// every condition functional of the problem.
Certificate certify(const GroebnerResult& result,
                    const InterpolationProblem& problem);

/// Classical evaluation/elimination computation of the reduced Groebner
/// basis of the vanishing ideal of a point set: candidate monomials are
/// consumed in increasing order, each either enlarging the quotient basis
/// or emitting a basis element.
GroebnerResult bm_vanishing_ideal(const std::vector<Point>& points,
                                  const MonomialOrdering& ord);

/// Whether two results agree exactly (quotient basis, leading monomials
/// and basis polynomials).
bool results_equal(const GroebnerResult& a, const GroebnerResult& b);

}  // namespace idealgb

#endif
