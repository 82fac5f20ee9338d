#include "idealgb/oracle.hpp"

#include <algorithm>

#include "idealgb/errors.hpp"

namespace idealgb {

DivisionResult divide(const Polynomial& f, std::span<const Polynomial> divisors,
                      const MonomialOrdering& ord) {
    for (const Polynomial& d : divisors)
        if (d.is_zero()) throw ZeroPolynomialError("division by zero polynomial");

    std::vector<ExponentVector> lms;
    lms.reserve(divisors.size());
    for (const Polynomial& d : divisors) lms.push_back(d.leading_monomial(ord));

    DivisionResult out{std::vector<Polynomial>(divisors.size(),
                                               Polynomial(f.dimension())),
                       Polynomial(f.dimension())};
    Polynomial p = f;
    while (!p.is_zero()) {
        ExponentVector t = p.leading_monomial(ord);
        Rational c = p.coefficient(t);
        bool divided = false;
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            if (!lms[i].divides(t)) continue;
            Polynomial factor = Polynomial::monomial(
                t - lms[i], c / divisors[i].coefficient(lms[i]));
            out.quotients[i] += factor;
            p -= factor * divisors[i];
            divided = true;
            break;
        }
        if (!divided) {
            Polynomial term = Polynomial::monomial(t, c);
            out.remainder += term;
            p -= term;
        }
    }
    return out;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g,
                        const MonomialOrdering& ord) {
    ExponentVector lf = f.leading_monomial(ord);
    ExponentVector lg = g.leading_monomial(ord);
    ExponentVector l = lcm(lf, lg);
    Polynomial a =
        Polynomial::monomial(l - lf, Rational(1) / f.coefficient(lf)) * f;
    Polynomial b =
        Polynomial::monomial(l - lg, Rational(1) / g.coefficient(lg)) * g;
    return a - b;
}

Certificate is_reduced_groebner(const GroebnerResult& result) {
    Certificate cert;
    const auto& ord = result.ordering;
    const auto& basis = result.basis;
    const std::size_t m = basis.size();

    if (m != result.leading_monomials.size()) cert.structure_ok = false;
    for (std::size_t i = 0; i < m && cert.structure_ok; ++i) {
        const Polynomial& g = basis[i];
        if (g.is_zero() || g.leading_monomial(ord) != result.leading_monomials[i] ||
            g.coefficient(result.leading_monomials[i]) != Rational(1)) {
            cert.structure_ok = false;
            break;
        }
        for (const auto& [alpha, c] : g.terms()) {
            if (alpha == result.leading_monomials[i]) continue;
            if (!result.quotient_basis.contains(alpha)) {
                cert.structure_ok = false;
                break;
            }
        }
    }
    for (std::size_t i = 0; i < m && cert.structure_ok; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            if (result.leading_monomials[i].divides(result.leading_monomials[j]))
                cert.structure_ok = false;
        }

    if (!cert.structure_ok) return cert;

    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            ++cert.spairs_checked;
            const ExponentVector& a = result.leading_monomials[i];
            const ExponentVector& b = result.leading_monomials[j];
            if (lcm(a, b) == a + b) continue;  // coprime: reduces to zero
            Polynomial s = s_polynomial(basis[i], basis[j], ord);
            if (!divide(s, basis, ord).remainder.is_zero()) {
                cert.all_spairs_reduce_to_zero = false;
                return cert;
            }
        }
    }
    return cert;
}

Rational apply_condition_at_point(const Point& theta, const Polynomial& p,
                                  const Polynomial& f) {
    Rational result(0);
    for (const auto& [alpha, c] : p.terms()) {
        Polynomial df = f;
        for (int v = 0; v < alpha.dimension() && !df.is_zero(); ++v)
            for (int k = 0; k < alpha[v] && !df.is_zero(); ++k)
                df = df.derivative(v);
        if (df.is_zero()) continue;
        result += c * df.evaluate(theta.coordinates);
    }
    return result;
}

Certificate certify(const GroebnerResult& result,
                    const InterpolationProblem& problem) {
    Certificate cert = is_reduced_groebner(result);
    for (const Polynomial& g : result.basis) {
        for (const ConditionSpace& space : problem.conditions) {
            for (const Polynomial& p : space.generators) {
                ++cert.vanishing_checked;
                if (!apply_condition_at_point(space.point, p, g).is_zero())
                    cert.all_functionals_vanish = false;
            }
        }
    }
    return cert;
}

namespace {

struct ReducedRow {
    std::vector<Rational> values;
    std::size_t pivot;
    Polynomial representative;  // supported on the quotient basis found so far
};

std::vector<Rational> evaluate_at_points(const ExponentVector& alpha,
                                         const std::vector<Point>& points) {
    std::vector<Rational> v;
    v.reserve(points.size());
    Polynomial mono = Polynomial::monomial(alpha);
    for (const Point& p : points) v.push_back(mono.evaluate(p.coordinates));
    return v;
}

}  // namespace

GroebnerResult bm_vanishing_ideal(const std::vector<Point>& points,
                                  const MonomialOrdering& ord) {
    if (points.empty()) throw InvalidProblemError("no conditions");
    const int d = ord.dimension();
    const std::size_t n = points.size();
    for (const Point& p : points)
        if (p.dimension() != d)
            throw DimensionMismatchError("point dimension mismatch at " +
                                         p.str());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (points[i] == points[j]) throw DuplicatePointError(points[i].str());

    std::set<ExponentVector, MonomialLess> candidates{MonomialLess{ord}};
    candidates.insert(ExponentVector::zero(d));

    std::vector<ReducedRow> rows;
    std::set<ExponentVector> qb;
    std::vector<ExponentVector> lms;
    std::vector<Polynomial> basis;

    while (!candidates.empty()) {
        ExponentVector t = *candidates.begin();
        candidates.erase(candidates.begin());
        if (std::any_of(lms.begin(), lms.end(), [&](const ExponentVector& m) {
                return m.divides(t);
            }))
            continue;

        std::vector<Rational> v = evaluate_at_points(t, points);
        Polynomial h = Polynomial::monomial(t);
        for (const ReducedRow& row : rows) {
            if (v[row.pivot].is_zero()) continue;
            Rational c = v[row.pivot] / row.values[row.pivot];
            for (std::size_t i = 0; i < n; ++i) v[i] -= c * row.values[i];
            h.add_scaled(-c, row.representative);
        }

        bool zero = std::all_of(v.begin(), v.end(),
                                [](const Rational& x) { return x.is_zero(); });
        if (zero) {
            lms.push_back(t);
            basis.push_back(std::move(h));
        } else {
            std::size_t pivot = 0;
            while (v[pivot].is_zero()) ++pivot;
            rows.push_back(ReducedRow{std::move(v), pivot, std::move(h)});
            qb.insert(t);
            for (int var = 0; var < d; ++var)
                candidates.insert(t.incremented(var));
        }
    }

    if (qb.size() != n)
        throw std::logic_error("evaluation rank defect on distinct points");

    // Monic is automatic (each element is its candidate monomial minus a
    // combination of smaller quotient-basis monomials); sort canonically.
    std::vector<std::size_t> order(basis.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return ord.less(lms[a], lms[b]);
    });
    std::vector<ExponentVector> sorted_lms;
    std::vector<Polynomial> sorted_basis;
    for (std::size_t i : order) {
        sorted_lms.push_back(lms[i]);
        sorted_basis.push_back(basis[i]);
    }

    return GroebnerResult{ord, LowerSet{std::move(qb)}, std::move(sorted_lms),
                          std::move(sorted_basis), std::nullopt};
}

bool results_equal(const GroebnerResult& a, const GroebnerResult& b) {
    return a.quotient_basis.monomials == b.quotient_basis.monomials &&
           a.leading_monomials == b.leading_monomials && a.basis == b.basis;
}

}  // namespace idealgb
