#include "idealgb/gbuilder.hpp"

#include <stdexcept>

#include "idealgb/errors.hpp"
#include "idealgb/linalg.hpp"

namespace idealgb {

GroebnerResult groebner_from_shifted(std::vector<Polynomial> conditions,
                                     const MonomialOrdering& ord) {
    ReverseReducedBasis rr = reverse_reduce(std::move(conditions), ord);
    LowerSet qb = quotient_basis(rr);
    StaircaseCorners cs = corners(qb);

    std::vector<ExponentVector> lms = sorted_monomials(cs.monomials, ord);
    const std::size_t n = rr.polys.size();

    std::vector<Rational> pivot_scale(n);
    for (std::size_t j = 0; j < n; ++j)
        pivot_scale[j] = Rational(rr.least_monomials[j].factorial()) *
                         rr.polys[j].coefficient(rr.least_monomials[j]);

    std::vector<Polynomial> basis;
    basis.reserve(lms.size());
    for (const ExponentVector& alpha : lms) {
        Rational alpha_fact(alpha.factorial());
        Polynomial g = Polynomial::monomial(alpha);
        for (std::size_t j = 0; j < n; ++j) {
            Rational c = rr.polys[j].coefficient(alpha);
            if (c.is_zero()) continue;
            g -= Polynomial::monomial(rr.least_monomials[j],
                                      alpha_fact * c / pivot_scale[j]);
        }
        // The tail lives on the quotient basis; the corner must stay the
        // monic leading term.
        if (g.coefficient(alpha) != Rational(1) ||
            g.leading_monomial(ord) != alpha)
            throw std::logic_error("corner monomial is not leading");
        basis.push_back(std::move(g));
    }

    return GroebnerResult{ord, std::move(qb), std::move(lms), std::move(basis),
                          std::nullopt};
}

GroebnerResult groebner_lagrange(const std::vector<Point>& points,
                                 const MonomialOrdering& ord) {
    if (points.empty()) throw InvalidProblemError("no conditions");
    const int n = static_cast<int>(points.size());
    for (const Point& p : points)
        if (p.dimension() != ord.dimension())
            throw DimensionMismatchError("point dimension mismatch at " +
                                         p.str());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (points[static_cast<size_t>(i)] == points[static_cast<size_t>(j)])
                throw DuplicatePointError(points[static_cast<size_t>(i)].str());

    std::vector<Polynomial> conditions;
    conditions.reserve(static_cast<size_t>(n));
    for (const Point& p : points)
        conditions.push_back(truncated_exponential(p, n));
    return groebner_from_shifted(std::move(conditions), ord);
}

GroebnerResult groebner_hermite(const InterpolationProblem& problem,
                                bool skip_d_invariance) {
    problem.validate();
    if (!skip_d_invariance) {
        for (std::size_t i = 0; i < problem.conditions.size(); ++i) {
            DInvarianceReport report =
                validate_d_invariance(problem.conditions[i]);
            if (!report.ok)
                throw DInvarianceViolationError(static_cast<int>(i),
                                                report.generator_index,
                                                report.variable_index);
        }
    }
    return groebner_from_shifted(shift_conditions(problem), problem.ordering);
}

Polynomial interpolate(const InterpolationProblem& problem,
                       const std::vector<Rational>& values) {
    problem.validate();
    std::vector<Polynomial> shifted = shift_conditions(problem);
    if (values.size() != shifted.size())
        throw std::invalid_argument("interpolate: one value per functional");

    ReverseReducedBasis rr = reverse_reduce(shifted, problem.ordering);
    LowerSet qb = quotient_basis(rr);
    std::vector<ExponentVector> columns(qb.monomials.begin(),
                                        qb.monomials.end());

    auto solution = solve(functional_matrix(shifted, columns), values);
    if (!solution)
        throw std::logic_error("unisolvence matrix is singular");

    Polynomial g(problem.dimension);
    for (std::size_t j = 0; j < columns.size(); ++j)
        g += Polynomial::monomial(columns[j], (*solution)[j]);
    return g;
}

}  // namespace idealgb
