#ifndef IDEALGB_STAIRCASE_HPP
#define IDEALGB_STAIRCASE_HPP

#include <optional>
#include <set>
#include <span>

#include "idealgb/functional.hpp"
#include "idealgb/linalg.hpp"
#include "idealgb/ordering.hpp"
#include "idealgb/rcrb.hpp"

namespace idealgb {

/// A downward-closed set of monomials (a staircase's interior): whenever
/// alpha is present and alpha_j > 0, alpha - e_j is present too.
struct LowerSet {
    std::set<ExponentVector> monomials;

    bool contains(const ExponentVector& alpha) const {
        return monomials.count(alpha) > 0;
    }
    std::size_t size() const { return monomials.size(); }
};

/// nullopt when downward closed, otherwise an element whose predecessor is
/// missing.
std::optional<ExponentVector> lower_set_violation(
    const std::set<ExponentVector>& monomials);

/// The divisibility-minimal monomials outside a lower set.
struct StaircaseCorners {
    std::set<ExponentVector> monomials;
};

/// The least monomials of a reverse complete reduced basis, as the
/// monomial basis of the quotient ring. Throws MalformedConditionsError
/// when the collected set fails to be downward closed (possible only for
/// inputs that do not come from ideal-interpolation conditions).
LowerSet quotient_basis(const ReverseReducedBasis& basis);

/// The leading monomials of the reduced Groebner basis: candidates
/// {beta + e_j : beta in qb} \ qb, filtered to the divisibility-minimal
/// elements. Requires a nonempty lower set.
StaircaseCorners corners(const LowerSet& qb);

enum class SetOrder { LessThan, Equal, GreaterThan };

/// Compares two monomial sets: T1 < T2 iff max(T1 - T2) < max(T2 - T1)
/// under `ord`. Equal sets yield Equal; a strict subset compares below its
/// superset.
SetOrder compare_sets(const MonomialOrdering& ord,
                      const std::set<ExponentVector>& t1,
                      const std::set<ExponentVector>& t2);

/// Whether `qb` is the minimal unisolvent monomial set for the at-origin
/// conditions, by exhaustive search over size-n monomial sets of degree
/// <= n. Monomials outside the conditions' support union yield a zero
/// column and are pruned (they cannot appear in any unisolvent set).
/// Test-oracle machinery: gated to n <= 6 and dimension <= 3.
bool is_minimal_basis(const MonomialOrdering& ord, const LowerSet& qb,
                      std::span<const Polynomial> conditions);

/// The unisolvence matrix (delta_0 o P_i(D)) X^{beta_j} for the given
/// at-origin conditions and columns.
Matrix functional_matrix(std::span<const Polynomial> conditions,
                         std::span<const ExponentVector> columns);

}  // namespace idealgb

#endif
