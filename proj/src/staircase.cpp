#include "idealgb/staircase.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "idealgb/errors.hpp"

namespace idealgb {

std::optional<ExponentVector> lower_set_violation(
    const std::set<ExponentVector>& monomials) {
    for (const ExponentVector& alpha : monomials) {
        for (int v = 0; v < alpha.dimension(); ++v) {
            if (alpha[v] == 0) continue;
            if (!monomials.count(alpha.decremented(v))) return alpha;
        }
    }
    return std::nullopt;
}

LowerSet quotient_basis(const ReverseReducedBasis& basis) {
    std::set<ExponentVector> qb(basis.least_monomials.begin(),
                                basis.least_monomials.end());
    assert(qb.size() == basis.least_monomials.size());
    if (auto bad = lower_set_violation(qb))
        throw MalformedConditionsError(bad->str());
    return LowerSet{std::move(qb)};
}

StaircaseCorners corners(const LowerSet& qb) {
    if (qb.monomials.empty())
        throw std::invalid_argument("corners of an empty lower set");
    assert(!lower_set_violation(qb.monomials));
    const int d = qb.monomials.begin()->dimension();

    std::set<ExponentVector> candidates;
    for (const ExponentVector& beta : qb.monomials)
        for (int v = 0; v < d; ++v) {
            ExponentVector c = beta.incremented(v);
            if (!qb.contains(c)) candidates.insert(c);
        }

    std::set<ExponentVector> minimal;
    for (const ExponentVector& c : candidates) {
        bool dominated = false;
        for (const ExponentVector& other : candidates) {
            if (other != c && other.divides(c)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) minimal.insert(c);
    }
    return StaircaseCorners{std::move(minimal)};
}

SetOrder compare_sets(const MonomialOrdering& ord,
                      const std::set<ExponentVector>& t1,
                      const std::set<ExponentVector>& t2) {
    std::set<ExponentVector> only1, only2;
    std::set_difference(t1.begin(), t1.end(), t2.begin(), t2.end(),
                        std::inserter(only1, only1.end()));
    std::set_difference(t2.begin(), t2.end(), t1.begin(), t1.end(),
                        std::inserter(only2, only2.end()));
    if (only1.empty() && only2.empty()) return SetOrder::Equal;
    if (only1.empty()) return SetOrder::LessThan;
    if (only2.empty()) return SetOrder::GreaterThan;
    auto max_of = [&](const std::set<ExponentVector>& s) {
        return *std::max_element(s.begin(), s.end(), MonomialLess{ord});
    };
    return ord.less(max_of(only1), max_of(only2)) ? SetOrder::LessThan
                                                  : SetOrder::GreaterThan;
}

Matrix functional_matrix(std::span<const Polynomial> conditions,
                         std::span<const ExponentVector> columns) {
    Matrix m;
    m.reserve(conditions.size());
    for (const Polynomial& p : conditions) {
        std::vector<Rational> row;
        row.reserve(columns.size());
        for (const ExponentVector& beta : columns)
            row.push_back(Rational(beta.factorial()) * p.coefficient(beta));
        m.push_back(std::move(row));
    }
    return m;
}

bool is_minimal_basis(const MonomialOrdering& ord, const LowerSet& qb,
                      std::span<const Polynomial> conditions) {
    const std::size_t n = conditions.size();
    if (qb.size() != n || n == 0) return false;
    const int d = ord.dimension();
    if (n > 6 || d > 3)
        throw std::invalid_argument(
            "minimality search is gated to n <= 6, d <= 3");

    std::vector<ExponentVector> qb_vec(qb.monomials.begin(),
                                       qb.monomials.end());
    if (!nonsingular(functional_matrix(conditions, qb_vec))) return false;

    // Any monomial outside the support union gives a zero column, so no
    // unisolvent set can use it; restrict the search accordingly.
    std::vector<ExponentVector> candidates;
    for (const ExponentVector& m : support_union(conditions))
        if (m.total_degree() <= static_cast<int>(n)) candidates.push_back(m);
    if (candidates.size() < n) return true;

    std::vector<std::size_t> pick(n);
    for (std::size_t i = 0; i < n; ++i) pick[i] = i;
    while (true) {
        std::set<ExponentVector> t;
        std::vector<ExponentVector> t_vec;
        for (std::size_t i : pick) {
            t.insert(candidates[i]);
            t_vec.push_back(candidates[i]);
        }
        if (compare_sets(ord, t, qb.monomials) == SetOrder::LessThan &&
            nonsingular(functional_matrix(conditions, t_vec)))
            return false;

        // Next combination.
        std::size_t i = n;
        while (i > 0 && pick[i - 1] >= candidates.size() - n + (i - 1)) --i;
        if (i == 0) return true;
        ++pick[i - 1];
        for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
    }
}

}  // namespace idealgb
