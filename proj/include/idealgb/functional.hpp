#ifndef IDEALGB_FUNCTIONAL_HPP
#define IDEALGB_FUNCTIONAL_HPP

#include <span>
#include <string>
#include <vector>

#include "idealgb/ordering.hpp"
#include "idealgb/polynomial.hpp"
#include "idealgb/rational.hpp"

namespace idealgb {

/// An interpolation point with exact rational coordinates.
struct Point {
    std::vector<Rational> coordinates;

    int dimension() const { return static_cast<int>(coordinates.size()); }
    bool operator==(const Point&) const = default;
    std::string str() const;

    static Point origin(int dimension) {
        return Point{std::vector<Rational>(static_cast<size_t>(dimension))};
    }
};

/// The conditions attached to one point: the functionals
/// delta_point o P(D) for P over the generators. The span of the
/// generators is expected to be D-invariant (see validate_d_invariance).
struct ConditionSpace {
    Point point;
    std::vector<Polynomial> generators;
};

/// A full ideal-interpolation problem. Lagrange interpolation is the
/// special case where every generator list is {1}.
struct InterpolationProblem {
    int dimension;
    MonomialOrdering ordering;
    std::vector<ConditionSpace> conditions;

    /// n, the total number of condition functionals.
    int functional_count() const;

    /// Checks structural invariants: at least one condition, nonempty
    /// generator lists, consistent dimensions, pairwise-distinct points.
    /// Throws InvalidProblemError / DuplicatePointError /
    /// DimensionMismatchError.
    void validate() const;

    bool is_lagrange() const;
    std::vector<Point> points() const;
};

/// delta_0 o P(D) applied to f: sum over alpha of
/// alpha! * P^(alpha) * f^(alpha). Bilinear and exact.
Rational apply_functional(const Polynomial& p, const Polynomial& f);

/// lambda_n(e^{theta.X}): the coefficient of X^alpha is theta^alpha/alpha!
/// for every |alpha| <= degree_bound.
Polynomial truncated_exponential(const Point& theta, int degree_bound);

/// The problem's functionals converted to conditions at the origin:
/// lambda_n(e^{theta_i X} * P_ij) for all i, j, flattened in input order
/// (n = functional_count).
std::vector<Polynomial> shift_conditions(const InterpolationProblem& problem);

struct DInvarianceReport {
    bool ok = true;
    int generator_index = -1;
    int variable_index = -1;
};

/// Checks that every partial derivative of every generator stays inside
/// the span of the generators (exact rank computation). On failure the
/// report names the first escaping (generator, variable) pair.
DInvarianceReport validate_d_invariance(const ConditionSpace& space);

}  // namespace idealgb

#endif
