#include "idealgb/exponent.hpp"

#include <numeric>
#include <stdexcept>

namespace idealgb {

ExponentVector::ExponentVector(std::vector<int> exponents)
    : exponents_(std::move(exponents)) {
    for (int e : exponents_)
        if (e < 0)
            throw std::invalid_argument("negative exponent in monomial");
}

ExponentVector ExponentVector::zero(int dimension) {
    return ExponentVector(std::vector<int>(static_cast<size_t>(dimension), 0));
}

ExponentVector ExponentVector::unit(int dimension, int variable) {
    std::vector<int> e(static_cast<size_t>(dimension), 0);
    e.at(static_cast<size_t>(variable)) = 1;
    return ExponentVector(std::move(e));
}

int ExponentVector::total_degree() const {
    return std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
    if (dimension() != other.dimension())
        throw std::invalid_argument("exponent dimension mismatch");
    std::vector<int> e(exponents_);
    for (size_t i = 0; i < e.size(); ++i) e[i] += other.exponents_[i];
    return ExponentVector(std::move(e));
}

ExponentVector ExponentVector::operator-(const ExponentVector& other) const {
    if (dimension() != other.dimension())
        throw std::invalid_argument("exponent dimension mismatch");
    std::vector<int> e(exponents_);
    for (size_t i = 0; i < e.size(); ++i) {
        e[i] -= other.exponents_[i];
        if (e[i] < 0)
            throw std::invalid_argument("monomial difference is not a monomial");
    }
    return ExponentVector(std::move(e));
}

ExponentVector ExponentVector::decremented(int variable) const {
    std::vector<int> e(exponents_);
    if (e.at(static_cast<size_t>(variable)) <= 0)
        throw std::invalid_argument("cannot decrement a zero exponent");
    --e[static_cast<size_t>(variable)];
    return ExponentVector(std::move(e));
}

ExponentVector ExponentVector::incremented(int variable) const {
    std::vector<int> e(exponents_);
    ++e.at(static_cast<size_t>(variable));
    return ExponentVector(std::move(e));
}

bool ExponentVector::divides(const ExponentVector& other) const {
    if (dimension() != other.dimension()) return false;
    for (size_t i = 0; i < exponents_.size(); ++i)
        if (exponents_[i] > other.exponents_[i]) return false;
    return true;
}

mpz_class ExponentVector::factorial() const {
    mpz_class result = 1;
    mpz_class f;
    for (int e : exponents_) {
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(e));
        result *= f;
    }
    return result;
}

std::string ExponentVector::str() const {
    std::string out;
    for (size_t i = 0; i < exponents_.size(); ++i) {
        if (exponents_[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(i + 1);
        if (exponents_[i] > 1) out += "^" + std::to_string(exponents_[i]);
    }
    return out.empty() ? "1" : out;
}

ExponentVector lcm(const ExponentVector& a, const ExponentVector& b) {
    if (a.dimension() != b.dimension())
        throw std::invalid_argument("exponent dimension mismatch");
    std::vector<int> e(static_cast<size_t>(a.dimension()));
    for (size_t i = 0; i < e.size(); ++i)
        e[i] = std::max(a.exponents()[i], b.exponents()[i]);
    return ExponentVector(std::move(e));
}

namespace {

void enumerate(int dimension, int position, int remaining,
               std::vector<int>& current, std::vector<ExponentVector>& out) {
    if (position == dimension) {
        out.push_back(ExponentVector(current));
        return;
    }
    for (int e = 0; e <= remaining; ++e) {
        current[static_cast<size_t>(position)] = e;
        enumerate(dimension, position + 1, remaining - e, current, out);
    }
    current[static_cast<size_t>(position)] = 0;
}

}  // namespace

std::vector<ExponentVector> monomials_up_to_degree(int dimension,
                                                   int max_degree) {
    std::vector<ExponentVector> out;
    std::vector<int> current(static_cast<size_t>(dimension), 0);
    enumerate(dimension, 0, max_degree, current, out);
    return out;
}

}  // namespace idealgb
