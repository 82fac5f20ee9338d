#ifndef IDEALGB_RATIONAL_HPP
#define IDEALGB_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace idealgb {

namespace detail {
inline thread_local std::uint64_t rational_ops = 0;
}

/// Number of exact rational arithmetic operations performed on this thread
/// since the last reset. The benchmark reports these next to wall time.
inline std::uint64_t rational_op_count() { return detail::rational_ops; }
inline void reset_rational_op_count() { detail::rational_ops = 0; }

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator. Thin wrapper over GMP's mpq_class; arithmetic
/// operators additionally bump the per-thread operation counter.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) { canonical(); }
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        canonical();
    }

    /// Parses "p", "-p" or "p/q" with decimal integers. Throws ParseError.
    static Rational from_string(std::string_view text);

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    Rational abs() const { return Rational(::abs(v_)); }

    /// "p" when the denominator is 1, otherwise "p/q".
    std::string str() const { return v_.get_str(); }

    friend Rational operator-(const Rational& a) {
        ++detail::rational_ops;
        return Rational(mpq_class(-a.v_));
    }
    friend Rational operator+(const Rational& a, const Rational& b) {
        ++detail::rational_ops;
        return Rational(mpq_class(a.v_ + b.v_));
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        ++detail::rational_ops;
        return Rational(mpq_class(a.v_ - b.v_));
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        ++detail::rational_ops;
        return Rational(mpq_class(a.v_ * b.v_));
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        ++detail::rational_ops;
        return Rational(mpq_class(a.v_ / b.v_));
    }

    Rational& operator+=(const Rational& b) {
        ++detail::rational_ops;
        v_ += b.v_;
        return *this;
    }
    Rational& operator-=(const Rational& b) {
        ++detail::rational_ops;
        v_ -= b.v_;
        return *this;
    }
    Rational& operator*=(const Rational& b) {
        ++detail::rational_ops;
        v_ *= b.v_;
        return *this;
    }
    Rational& operator/=(const Rational& b) {
        ++detail::rational_ops;
        v_ /= b.v_;
        return *this;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return cmp(a.v_, b.v_) == 0;
    }
    friend bool operator!=(const Rational& a, const Rational& b) {
        return cmp(a.v_, b.v_) != 0;
    }
    friend bool operator<(const Rational& a, const Rational& b) {
        return cmp(a.v_, b.v_) < 0;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return cmp(a.v_, b.v_) <= 0;
    }
    friend bool operator>(const Rational& a, const Rational& b) {
        return cmp(a.v_, b.v_) > 0;
    }
    friend bool operator>=(const Rational& a, const Rational& b) {
        return cmp(a.v_, b.v_) >= 0;
    }

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) {}
    void canonical() { v_.canonicalize(); }

    mpq_class v_;
};

/// base^exp with exp >= 0, computed exactly.
Rational pow(const Rational& base, int exp);

}  // namespace idealgb

#endif
