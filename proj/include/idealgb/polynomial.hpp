#ifndef IDEALGB_POLYNOMIAL_HPP
#define IDEALGB_POLYNOMIAL_HPP

#include <map>
#include <set>
#include <span>
#include <vector>

#include "idealgb/exponent.hpp"
#include "idealgb/ordering.hpp"
#include "idealgb/rational.hpp"

namespace idealgb {

/// Multivariate polynomial with exact rational coefficients: a finite map
/// from exponent vectors to nonzero coefficients. The zero polynomial is
/// the empty map. Terms are stored in container order, so one value can be
/// inspected under any monomial ordering.
class Polynomial {
public:
    using TermMap = std::map<ExponentVector, Rational>;

    /// The zero polynomial in `dimension` variables.
    explicit Polynomial(int dimension);

    static Polynomial constant(int dimension, const Rational& value);
    static Polynomial monomial(ExponentVector exponent,
                               const Rational& coefficient = Rational(1));

    int dimension() const { return dimension_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// The coefficient of X^alpha (zero if absent).
    Rational coefficient(const ExponentVector& alpha) const;

    int total_degree() const;  // -1 for the zero polynomial

    std::set<ExponentVector> support() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);

    /// this += c * p, the elimination workhorse.
    Polynomial& add_scaled(const Rational& c, const Polynomial& p);

    friend Polynomial operator*(const Rational& c, const Polynomial& p);

    /// Keeps the terms of total degree <= max_degree (the truncation
    /// lambda_n when max_degree = n).
    Polynomial truncated(int max_degree) const;

    /// Partial derivative with respect to the given variable index.
    Polynomial derivative(int variable) const;

    /// Exact evaluation at a rational point of matching dimension.
    Rational evaluate(std::span<const Rational> point) const;

    /// Largest / smallest monomial of the support under `ord`.
    /// Throws ZeroPolynomialError on the zero polynomial.
    ExponentVector leading_monomial(const MonomialOrdering& ord) const;
    ExponentVector least_monomial(const MonomialOrdering& ord) const;

    bool operator==(const Polynomial&) const = default;

private:
    void insert_term(ExponentVector alpha, const Rational& c);
    void check_same_dimension(const Polynomial& other) const;

    int dimension_ = 0;
    TermMap terms_;
};

/// The set of all monomials occurring in the given polynomials.
std::set<ExponentVector> support_union(std::span<const Polynomial> ps);

}  // namespace idealgb

#endif
