#include "idealgb/rational.hpp"

#include <cctype>
#include <stdexcept>

#include "idealgb/errors.hpp"

namespace idealgb {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational Rational::from_string(std::string_view text) {
    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    std::string_view num = s;
    std::string_view den = "1";
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num = s.substr(0, slash);
        den = s.substr(slash + 1);
    }
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("invalid rational \"" + std::string(text) + "\"", 1);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0)
        throw ParseError("zero denominator in \"" + std::string(text) + "\"",
                         1);
    if (negative) n = -n;
    return Rational(n, d);
}

Rational pow(const Rational& base, int exp) {
    if (exp < 0) throw std::invalid_argument("pow: negative exponent");
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), base.numerator().get_mpz_t(),
               static_cast<unsigned long>(exp));
    mpz_pow_ui(den.get_mpz_t(), base.denominator().get_mpz_t(),
               static_cast<unsigned long>(exp));
    return Rational(num, den);
}

}  // namespace idealgb
