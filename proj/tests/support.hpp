#ifndef IDEALGB_TESTS_SUPPORT_HPP
#define IDEALGB_TESTS_SUPPORT_HPP

// Shared helpers for the test suites. The checks in here (reference
// comparators, fraction-free rank, differentiation-based functional
// application) are written against the definitions, independent of the
// library code paths they validate.

#include <set>
#include <string>
#include <vector>

#include "idealgb/bench.hpp"
#include "idealgb/errors.hpp"
#include "idealgb/gbuilder.hpp"
#include "idealgb/linalg.hpp"
#include "idealgb/oracle.hpp"
#include "idealgb/parse.hpp"
#include "idealgb/problem_io.hpp"
#include "idealgb/rcrb.hpp"
#include "idealgb/staircase.hpp"

namespace testsupport {

using namespace idealgb;

extern const std::vector<std::string> X;
extern const std::vector<std::string> XY;
extern const std::vector<std::string> XYZ;

/// Shorthand polynomial literal.
Polynomial P(const std::string& text, const std::vector<std::string>& vars);
ExponentVector E(std::vector<int> exponents);
Point pt(const std::vector<long>& coords);

std::set<ExponentVector> monomial_set(const std::vector<std::string>& monos,
                                      const std::vector<std::string>& vars);

/// Fraction-free (Bareiss) row rank over the integers after clearing
/// denominators rowwise; independent of linalg's rational elimination.
int bareiss_rank(const Matrix& m);

/// Reference ordering comparator built directly from the textbook
/// definitions via transformed-tuple lexicographic comparison.
bool ref_less(const MonomialOrdering& ord, const ExponentVector& a,
              const ExponentVector& b);

/// delta_0 o P(D) f by repeated symbolic differentiation of f and
/// evaluation at the origin.
Rational diff_apply_at_origin(const Polynomial& p, const Polynomial& f);

ExponentVector random_exponent(SplitMix64& rng, int dimension,
                               int max_total_degree);
Polynomial random_polynomial(SplitMix64& rng, int dimension, int max_degree,
                             int max_terms, int coeff_range);
/// Nonzero variant (retries).
Polynomial random_nonzero_polynomial(SplitMix64& rng, int dimension,
                                     int max_degree, int max_terms,
                                     int coeff_range);

/// Random downward-closed monomial set of the given size containing 1.
std::set<ExponentVector> random_lower_set(SplitMix64& rng, int dimension,
                                          int size);

/// Linearly independent polynomials spanning the smallest D-invariant
/// space containing p (p itself first).
std::vector<Polynomial> derivative_closure(const Polynomial& p);

/// Basis lists compared as multisets of polynomials.
bool same_polynomials(std::vector<Polynomial> a, std::vector<Polynomial> b);

/// A random ordering of the given kind with a random variable priority.
MonomialOrdering random_priority_ordering(SplitMix64& rng, OrderKind kind,
                                          int dimension);

}  // namespace testsupport

#endif
