#include "idealgb/ordering.hpp"

#include <algorithm>
#include <stdexcept>

#include "idealgb/errors.hpp"

namespace idealgb {

std::string to_string(OrderKind kind) {
    switch (kind) {
        case OrderKind::Lex: return "lex";
        case OrderKind::Grlex: return "grlex";
        case OrderKind::Grevlex: return "grevlex";
    }
    return "?";
}

OrderKind order_kind_from_string(const std::string& name) {
    if (name == "lex") return OrderKind::Lex;
    if (name == "grlex") return OrderKind::Grlex;
    if (name == "grevlex") return OrderKind::Grevlex;
    throw std::invalid_argument("unknown ordering kind \"" + name + "\"");
}

MonomialOrdering::MonomialOrdering(OrderKind kind,
                                   std::vector<int> variable_priority)
    : kind_(kind), priority_(std::move(variable_priority)) {
    std::vector<char> seen(priority_.size(), 0);
    for (int v : priority_) {
        if (v < 0 || v >= dimension() || seen[static_cast<size_t>(v)])
            throw std::invalid_argument(
                "variable priority must be a permutation of the variable "
                "indices");
        seen[static_cast<size_t>(v)] = 1;
    }
}

namespace {
std::vector<int> natural(int dimension) {
    std::vector<int> p(static_cast<size_t>(dimension));
    for (int i = 0; i < dimension; ++i) p[static_cast<size_t>(i)] = i;
    return p;
}
}  // namespace

MonomialOrdering MonomialOrdering::lex(int dimension) {
    return MonomialOrdering(OrderKind::Lex, natural(dimension));
}
MonomialOrdering MonomialOrdering::grlex(int dimension) {
    return MonomialOrdering(OrderKind::Grlex, natural(dimension));
}
MonomialOrdering MonomialOrdering::grevlex(int dimension) {
    return MonomialOrdering(OrderKind::Grevlex, natural(dimension));
}

std::strong_ordering MonomialOrdering::compare(const ExponentVector& a,
                                               const ExponentVector& b) const {
    if (a.dimension() != dimension() || b.dimension() != dimension())
        throw DimensionMismatchError("monomial/ordering dimension mismatch");

    if (kind_ != OrderKind::Lex) {
        int da = a.total_degree();
        int db = b.total_degree();
        if (da != db) return da <=> db;
    }
    if (kind_ == OrderKind::Grevlex) {
        // Equal degrees: the monomial with the smaller exponent at the
        // least significant differing variable is the larger one.
        for (auto it = priority_.rbegin(); it != priority_.rend(); ++it) {
            if (a[*it] != b[*it]) return b[*it] <=> a[*it];
        }
        return std::strong_ordering::equal;
    }
    for (int v : priority_) {
        if (a[v] != b[v]) return a[v] <=> b[v];
    }
    return std::strong_ordering::equal;
}

std::vector<ExponentVector> sorted_monomials(
    const std::set<ExponentVector>& set, const MonomialOrdering& ord) {
    std::vector<ExponentVector> out(set.begin(), set.end());
    std::sort(out.begin(), out.end(), MonomialLess{ord});
    return out;
}

}  // namespace idealgb
