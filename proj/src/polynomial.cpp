#include "idealgb/polynomial.hpp"

#include <algorithm>

#include "idealgb/errors.hpp"

namespace idealgb {

Polynomial::Polynomial(int dimension) : dimension_(dimension) {
    if (dimension < 1)
        throw std::invalid_argument("polynomial dimension must be >= 1");
}

Polynomial Polynomial::constant(int dimension, const Rational& value) {
    Polynomial p(dimension);
    p.insert_term(ExponentVector::zero(dimension), value);
    return p;
}

Polynomial Polynomial::monomial(ExponentVector exponent,
                                const Rational& coefficient) {
    Polynomial p(exponent.dimension());
    p.insert_term(std::move(exponent), coefficient);
    return p;
}

Rational Polynomial::coefficient(const ExponentVector& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Rational(0) : it->second;
}

int Polynomial::total_degree() const {
    int deg = -1;
    for (const auto& [alpha, c] : terms_)
        deg = std::max(deg, alpha.total_degree());
    return deg;
}

std::set<ExponentVector> Polynomial::support() const {
    std::set<ExponentVector> s;
    for (const auto& [alpha, c] : terms_) s.insert(alpha);
    return s;
}

void Polynomial::insert_term(ExponentVector alpha, const Rational& c) {
    if (alpha.dimension() != dimension_)
        throw DimensionMismatchError("term dimension mismatch");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(std::move(alpha), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void Polynomial::check_same_dimension(const Polynomial& other) const {
    if (dimension_ != other.dimension_)
        throw DimensionMismatchError("polynomial dimension mismatch");
}

Polynomial Polynomial::operator-() const {
    Polynomial out(dimension_);
    for (const auto& [alpha, c] : terms_)
        out.terms_.emplace_hint(out.terms_.end(), alpha, -c);
    return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    check_same_dimension(other);
    for (const auto& [alpha, c] : other.terms_) insert_term(alpha, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    check_same_dimension(other);
    for (const auto& [alpha, c] : other.terms_) insert_term(alpha, -c);
    return *this;
}

Polynomial& Polynomial::add_scaled(const Rational& c, const Polynomial& p) {
    check_same_dimension(p);
    if (c.is_zero()) return *this;
    for (const auto& [alpha, pc] : p.terms_) insert_term(alpha, c * pc);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial out(*this);
    out += other;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial out(*this);
    out -= other;
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    check_same_dimension(other);
    Polynomial out(dimension_);
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : other.terms_) out.insert_term(a + b, ca * cb);
    return out;
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    Polynomial out(p.dimension());
    out.add_scaled(c, p);
    return out;
}

Polynomial Polynomial::truncated(int max_degree) const {
    Polynomial out(dimension_);
    for (const auto& [alpha, c] : terms_)
        if (alpha.total_degree() <= max_degree)
            out.terms_.emplace_hint(out.terms_.end(), alpha, c);
    return out;
}

Polynomial Polynomial::derivative(int variable) const {
    Polynomial out(dimension_);
    for (const auto& [alpha, c] : terms_) {
        int e = alpha[variable];
        if (e == 0) continue;
        out.insert_term(alpha.decremented(variable), Rational(e) * c);
    }
    return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
    if (static_cast<int>(point.size()) != dimension_)
        throw DimensionMismatchError("evaluation point dimension mismatch");
    Rational result(0);
    for (const auto& [alpha, c] : terms_) {
        Rational term = c;
        for (int v = 0; v < dimension_; ++v) {
            if (alpha[v] == 0) continue;
            term *= pow(point[static_cast<size_t>(v)], alpha[v]);
        }
        result += term;
    }
    return result;
}

ExponentVector Polynomial::leading_monomial(const MonomialOrdering& ord) const {
    if (terms_.empty())
        throw ZeroPolynomialError("leading monomial of the zero polynomial");
    const ExponentVector* best = &terms_.begin()->first;
    for (const auto& [alpha, c] : terms_)
        if (ord.less(*best, alpha)) best = &alpha;
    return *best;
}

ExponentVector Polynomial::least_monomial(const MonomialOrdering& ord) const {
    if (terms_.empty())
        throw ZeroPolynomialError("least monomial of the zero polynomial");
    const ExponentVector* best = &terms_.begin()->first;
    for (const auto& [alpha, c] : terms_)
        if (ord.less(alpha, *best)) best = &alpha;
    return *best;
}

std::set<ExponentVector> support_union(std::span<const Polynomial> ps) {
    std::set<ExponentVector> s;
    for (const Polynomial& p : ps)
        for (const auto& [alpha, c] : p.terms()) s.insert(alpha);
    return s;
}

}  // namespace idealgb
