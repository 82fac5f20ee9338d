#ifndef IDEALGB_EXPONENT_HPP
#define IDEALGB_EXPONENT_HPP

#include <compare>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace idealgb {

/// Exponent vector of a monomial: a point of Z_{>=0}^d. The comparison
/// operators give a fixed container order (plain lexicographic on the
/// entries), independent of any monomial ordering; ordering-sensitive code
/// always goes through MonomialOrdering.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::vector<int> exponents);

    static ExponentVector zero(int dimension);
    /// The unit vector e_j, i.e. the monomial x_{variable+1}.
    static ExponentVector unit(int dimension, int variable);

    int dimension() const { return static_cast<int>(exponents_.size()); }
    int operator[](int i) const { return exponents_[static_cast<size_t>(i)]; }
    const std::vector<int>& exponents() const { return exponents_; }

    int total_degree() const;
    bool is_constant() const { return total_degree() == 0; }

    /// Monomial product: componentwise sum.
    ExponentVector operator+(const ExponentVector& other) const;
    /// Componentwise difference; caller guarantees divisibility.
    ExponentVector operator-(const ExponentVector& other) const;
    /// this - e_{variable}; requires a positive entry there.
    ExponentVector decremented(int variable) const;
    ExponentVector incremented(int variable) const;

    bool divides(const ExponentVector& other) const;

    /// alpha! = alpha_1! * ... * alpha_d!
    mpz_class factorial() const;

    auto operator<=>(const ExponentVector&) const = default;

    /// Debug rendering with synthetic names, e.g. "x1^2*x3".
    std::string str() const;

private:
    std::vector<int> exponents_;
};

/// Componentwise max, the exponent of lcm of two monomials.
ExponentVector lcm(const ExponentVector& a, const ExponentVector& b);

/// All exponent vectors in d variables with total degree <= max_degree,
/// in container order.
std::vector<ExponentVector> monomials_up_to_degree(int dimension,
                                                   int max_degree);

}  // namespace idealgb

#endif
