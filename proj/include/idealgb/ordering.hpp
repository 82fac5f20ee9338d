#ifndef IDEALGB_ORDERING_HPP
#define IDEALGB_ORDERING_HPP

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "idealgb/exponent.hpp"

namespace idealgb {

enum class OrderKind { Lex, Grlex, Grevlex };

std::string to_string(OrderKind kind);
OrderKind order_kind_from_string(const std::string& name);

/// A monomial ordering: one of lex/grlex/grevlex together with a variable
/// priority (a permutation of the variable indices, highest first). Total,
/// multiplicative and a well-ordering; those axioms are property-tested.
class MonomialOrdering {
public:
    /// `variable_priority` must be a permutation of 0..d-1.
    MonomialOrdering(OrderKind kind, std::vector<int> variable_priority);

    /// Natural priority x1 > x2 > ... > xd.
    static MonomialOrdering lex(int dimension);
    static MonomialOrdering grlex(int dimension);
    static MonomialOrdering grevlex(int dimension);

    OrderKind kind() const { return kind_; }
    const std::vector<int>& variable_priority() const { return priority_; }
    int dimension() const { return static_cast<int>(priority_.size()); }

    /// less/equivalent/greater for a < b / a == b / a > b under this
    /// ordering. Throws DimensionMismatchError.
    std::strong_ordering compare(const ExponentVector& a,
                                 const ExponentVector& b) const;

    bool less(const ExponentVector& a, const ExponentVector& b) const {
        return compare(a, b) < 0;
    }

    bool operator==(const MonomialOrdering&) const = default;

private:
    OrderKind kind_;
    std::vector<int> priority_;
};

/// Comparator for ordered containers of monomials under a given ordering.
struct MonomialLess {
    MonomialOrdering ordering;
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        return ordering.less(a, b);
    }
};

/// The monomials of `set` in ascending order under `ord`.
std::vector<ExponentVector> sorted_monomials(
    const std::set<ExponentVector>& set, const MonomialOrdering& ord);

}  // namespace idealgb

#endif
