#include "idealgb/functional.hpp"

#include <set>

#include "idealgb/errors.hpp"
#include "idealgb/linalg.hpp"

namespace idealgb {

std::string Point::str() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coordinates.size(); ++i) {
        if (i) out += ", ";
        out += coordinates[i].str();
    }
    return out + ")";
}

int InterpolationProblem::functional_count() const {
    int n = 0;
    for (const ConditionSpace& space : conditions)
        n += static_cast<int>(space.generators.size());
    return n;
}

void InterpolationProblem::validate() const {
    if (ordering.dimension() != dimension)
        throw DimensionMismatchError("ordering/problem dimension mismatch");
    if (conditions.empty()) throw InvalidProblemError("no conditions");
    std::set<std::vector<std::pair<mpz_class, mpz_class>>> seen;
    for (const ConditionSpace& space : conditions) {
        if (space.point.dimension() != dimension)
            throw DimensionMismatchError("point dimension mismatch at " +
                                         space.point.str());
        if (space.generators.empty())
            throw InvalidProblemError("condition at " + space.point.str() +
                                      " has no functionals");
        for (const Polynomial& g : space.generators) {
            if (g.dimension() != dimension)
                throw DimensionMismatchError(
                    "functional dimension mismatch at " + space.point.str());
            if (g.is_zero())
                throw InvalidProblemError("zero functional at " +
                                          space.point.str());
        }
        std::vector<std::pair<mpz_class, mpz_class>> key;
        for (const Rational& c : space.point.coordinates)
            key.emplace_back(c.numerator(), c.denominator());
        if (!seen.insert(key).second)
            throw DuplicatePointError(space.point.str());
    }
}

bool InterpolationProblem::is_lagrange() const {
    for (const ConditionSpace& space : conditions) {
        if (space.generators.size() != 1) return false;
        if (space.generators[0] != Polynomial::constant(dimension, Rational(1)))
            return false;
    }
    return true;
}

std::vector<Point> InterpolationProblem::points() const {
    std::vector<Point> out;
    out.reserve(conditions.size());
    for (const ConditionSpace& space : conditions) out.push_back(space.point);
    return out;
}

Rational apply_functional(const Polynomial& p, const Polynomial& f) {
    if (p.dimension() != f.dimension())
        throw DimensionMismatchError("functional/argument dimension mismatch");
    // Iterate over the smaller support.
    const Polynomial& small = p.term_count() <= f.term_count() ? p : f;
    const Polynomial& large = p.term_count() <= f.term_count() ? f : p;
    Rational result(0);
    for (const auto& [alpha, c] : small.terms()) {
        Rational other = large.coefficient(alpha);
        if (other.is_zero()) continue;
        result += Rational(alpha.factorial()) * c * other;
    }
    return result;
}

Polynomial truncated_exponential(const Point& theta, int degree_bound) {
    if (degree_bound < 0)
        throw std::invalid_argument("negative truncation degree");
    const int d = theta.dimension();
    // Only variables with a nonzero coordinate contribute terms.
    std::vector<int> active;
    for (int v = 0; v < d; ++v)
        if (!theta.coordinates[static_cast<size_t>(v)].is_zero())
            active.push_back(v);

    Polynomial out(d);
    std::vector<int> expo(static_cast<size_t>(d), 0);
    // Depth-first enumeration of exponents over the active variables.
    auto emit = [&](auto&& self, std::size_t idx, int remaining,
                    const Rational& coeff) -> void {
        if (idx == active.size()) {
            out += Polynomial::monomial(ExponentVector(expo), coeff);
            return;
        }
        int v = active[idx];
        Rational c = coeff;
        for (int e = 0; e <= remaining; ++e) {
            expo[static_cast<size_t>(v)] = e;
            self(self, idx + 1, remaining - e, c);
            c *= theta.coordinates[static_cast<size_t>(v)] / Rational(e + 1);
        }
        expo[static_cast<size_t>(v)] = 0;
    };
    emit(emit, 0, degree_bound, Rational(1));
    return out;
}

std::vector<Polynomial> shift_conditions(const InterpolationProblem& problem) {
    const int n = problem.functional_count();
    std::vector<Polynomial> out;
    out.reserve(static_cast<size_t>(n));
    for (const ConditionSpace& space : problem.conditions) {
        Polynomial exp_part = truncated_exponential(space.point, n);
        for (const Polynomial& g : space.generators)
            out.push_back((exp_part * g).truncated(n));
    }
    return out;
}

DInvarianceReport validate_d_invariance(const ConditionSpace& space) {
    const int d = space.point.dimension();
    std::vector<Polynomial> gens = space.generators;
    std::set<ExponentVector> columns = support_union(gens);
    // The derivatives' supports are covered by derivatives of the columns.
    for (const ExponentVector& alpha : support_union(gens))
        for (int v = 0; v < d; ++v)
            if (alpha[v] > 0) columns.insert(alpha.decremented(v));

    auto row_of = [&](const Polynomial& p) {
        std::vector<Rational> row;
        row.reserve(columns.size());
        for (const ExponentVector& alpha : columns)
            row.push_back(p.coefficient(alpha));
        return row;
    };

    Matrix span_rows;
    for (const Polynomial& g : gens) span_rows.push_back(row_of(g));

    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
        for (int v = 0; v < d; ++v) {
            Polynomial dg = gens[gi].derivative(v);
            if (dg.is_zero()) continue;
            if (!in_span(span_rows, row_of(dg)))
                return DInvarianceReport{false, static_cast<int>(gi), v};
        }
    }
    return DInvarianceReport{};
}

}  // namespace idealgb
