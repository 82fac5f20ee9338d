#ifndef IDEALGB_CERTIFICATE_HPP
#define IDEALGB_CERTIFICATE_HPP

#include <optional>

namespace idealgb {

/// Verification record for a Groebner-basis result. A result is certified
/// iff every recorded check passed.
struct Certificate {
    /// Monic elements, tails inside the quotient basis, pairwise minimal
    /// leading monomials.
    bool structure_ok = true;
    /// S-pair checks: count examined (coprime leading monomials are known
    /// to reduce to zero and are not divided out explicitly).
    int spairs_checked = 0;
    bool all_spairs_reduce_to_zero = true;
    /// (functional, basis element) annihilation checks.
    int vanishing_checked = 0;
    bool all_functionals_vanish = true;
    /// Set when an independent vanishing-ideal computation was compared.
    std::optional<bool> oracle_match;

    bool certified() const {
        return structure_ok && all_spairs_reduce_to_zero &&
               all_functionals_vanish && oracle_match.value_or(true);
    }
};

}  // namespace idealgb

#endif
