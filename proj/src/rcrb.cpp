#include "idealgb/rcrb.hpp"

#include <cassert>
#include <stdexcept>

#include "idealgb/errors.hpp"
#include "idealgb/linalg.hpp"

namespace idealgb {

ReverseReducedBasis reverse_reduce(std::vector<Polynomial> ps,
                                   const MonomialOrdering& ord) {
    if (ps.empty()) throw std::invalid_argument("reverse_reduce: empty input");
    for (const Polynomial& p : ps)
        if (p.dimension() != ord.dimension())
            throw DimensionMismatchError("polynomial/ordering dimension mismatch");

    const std::size_t n = ps.size();
    std::vector<ExponentVector> lms(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (ps[k].is_zero())
            throw LinearDependenceError(static_cast<int>(k) + 1);
        ExponentVector beta = ps[k].least_monomial(ord);
        Rational pivot = ps[k].coefficient(beta);
        assert(!pivot.is_zero());
        for (std::size_t j = 0; j < n; ++j) {
            if (j == k) continue;
            Rational c = ps[j].coefficient(beta);
            if (c.is_zero()) continue;
            ps[j].add_scaled(-(c / pivot), ps[k]);
        }
        lms[k] = std::move(beta);
    }
    // Eliminations at later pivots never disturb an established least
    // monomial; make that explicit.
    for (std::size_t k = 0; k < n; ++k) {
        if (ps[k].least_monomial(ord) != lms[k])
            throw std::logic_error("reverse_reduce: least monomial drifted");
    }
    return ReverseReducedBasis{std::move(ps), std::move(lms)};
}

namespace {

bool reduced_check(std::span<const Polynomial> ps, const MonomialOrdering& ord,
                   bool use_least) {
    const std::size_t n = ps.size();
    if (n == 0) return true;
    for (const Polynomial& p : ps)
        if (p.is_zero()) return false;
    if (rank(coefficient_matrix(ps)) != static_cast<int>(n)) return false;
    for (std::size_t i = 0; i < n; ++i) {
        ExponentVector m = use_least ? ps[i].least_monomial(ord)
                                     : ps[i].leading_monomial(ord);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            if (!ps[j].coefficient(m).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace

bool is_reverse_reduced(std::span<const Polynomial> ps,
                        const MonomialOrdering& ord) {
    return reduced_check(ps, ord, true);
}

bool is_complete_reduced(std::span<const Polynomial> ps,
                         const MonomialOrdering& ord) {
    return reduced_check(ps, ord, false);
}

}  // namespace idealgb
