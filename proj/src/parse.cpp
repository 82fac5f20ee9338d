#include "idealgb/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "idealgb/errors.hpp"

namespace idealgb {

namespace {

constexpr int kMaxExponent = 1000000;

bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() &&
               std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool at_end() { return peek() == '\0'; }
    std::size_t here() {
        skip_ws();
        return pos + 1;  // 1-based
    }

    std::string lex_integer() {
        skip_ws();
        std::string digits;
        while (pos < text.size() &&
               std::isdigit(static_cast<unsigned char>(text[pos])))
            digits += text[pos++];
        if (digits.empty())
            throw ParseError("expected nonnegative integer", here());
        return digits;
    }

    Rational lex_rational() {
        std::string num = lex_integer();
        if (peek() == '/') {
            ++pos;
            std::size_t at = here();
            std::string den = lex_integer();
            mpz_class d(den, 10);
            if (d == 0) throw ParseError("zero denominator", at);
            return Rational(mpz_class(num, 10), d);
        }
        return Rational(mpz_class(num, 10));
    }

    std::string lex_identifier() {
        skip_ws();
        std::string name;
        if (pos < text.size() && ident_start(text[pos])) {
            name += text[pos++];
            while (pos < text.size() && ident_char(text[pos]))
                name += text[pos++];
        }
        return name;
    }
};

}  // namespace

Polynomial parse_polynomial(std::string_view text,
                            std::span<const std::string> variables) {
    const int d = static_cast<int>(variables.size());
    std::map<std::string, int, std::less<>> index;
    for (int v = 0; v < d; ++v) index.emplace(variables[v], v);

    Lexer lx{text};
    Polynomial result(d);
    if (lx.at_end()) throw ParseError("empty polynomial", lx.here());

    bool first = true;
    while (true) {
        int sign = 1;
        char c = lx.peek();
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            ++lx.pos;
            c = lx.peek();
        } else if (!first) {
            throw ParseError(std::string("expected '+' or '-' before '") + c +
                                 "'",
                             lx.here());
        }
        first = false;

        Rational coeff(1);
        std::vector<int> expo(static_cast<size_t>(d), 0);
        bool expect_variable = false;
        bool have_factor = false;

        if (std::isdigit(static_cast<unsigned char>(c))) {
            coeff = lx.lex_rational();
            have_factor = true;
            if (lx.peek() == '*') {
                ++lx.pos;
                expect_variable = true;
            }
        }
        while (true) {
            c = lx.peek();
            if (!ident_start(c)) {
                if (expect_variable)
                    throw ParseError("expected variable after '*'", lx.here());
                break;
            }
            std::size_t at = lx.here();
            std::string name = lx.lex_identifier();
            auto it = index.find(name);
            if (it == index.end())
                throw ParseError("unknown variable \"" + name + "\"", at);
            int exp = 1;
            if (lx.peek() == '^') {
                ++lx.pos;
                std::size_t eat = lx.here();
                std::string digits = lx.lex_integer();
                if (digits.size() > 7 || std::stol(digits) > kMaxExponent)
                    throw ParseError("exponent too large", eat);
                exp = static_cast<int>(std::stol(digits));
            }
            expo[static_cast<size_t>(it->second)] += exp;
            have_factor = true;
            expect_variable = false;
            if (lx.peek() == '*') {
                ++lx.pos;
                expect_variable = true;
            }
        }
        if (!have_factor) throw ParseError("expected term", lx.here());

        result += Polynomial::monomial(ExponentVector(std::move(expo)),
                                       Rational(sign) * coeff);
        if (lx.at_end()) break;
        c = lx.peek();
        if (c != '+' && c != '-')
            throw ParseError(std::string("unexpected character '") + c + "'",
                             lx.here());
    }
    return result;
}

std::string print_monomial(const ExponentVector& alpha,
                           std::span<const std::string> variables) {
    if (alpha.dimension() != static_cast<int>(variables.size()))
        throw DimensionMismatchError("monomial/variable-list dimension mismatch");
    std::string out;
    for (int v = 0; v < alpha.dimension(); ++v) {
        int e = alpha[v];
        if (e == 0) continue;
        if (!out.empty()) out += "*";
        out += variables[static_cast<size_t>(v)];
        if (e > 1) out += "^" + std::to_string(e);
    }
    return out.empty() ? "1" : out;
}

std::string print_polynomial(const Polynomial& p, const MonomialOrdering& ord,
                             std::span<const std::string> variables) {
    if (p.is_zero()) return "0";
    std::vector<const ExponentVector*> order;
    order.reserve(p.term_count());
    for (const auto& [alpha, c] : p.terms()) order.push_back(&alpha);
    std::sort(order.begin(), order.end(),
              [&](const ExponentVector* a, const ExponentVector* b) {
                  return ord.less(*b, *a);
              });

    std::string out;
    bool first = true;
    for (const ExponentVector* alpha : order) {
        Rational c = p.coefficient(*alpha);
        if (first) {
            if (c.sign() < 0) out += "-";
            first = false;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        Rational ac = c.abs();
        if (alpha->is_constant()) {
            out += ac.str();
        } else {
            if (ac != Rational(1)) out += ac.str() + "*";
            out += print_monomial(*alpha, variables);
        }
    }
    return out;
}

}  // namespace idealgb
