#include "support.hpp"

#include <algorithm>
#include <stdexcept>

namespace testsupport {

const std::vector<std::string> X = {"x"};
const std::vector<std::string> XY = {"x", "y"};
const std::vector<std::string> XYZ = {"x", "y", "z"};

Polynomial P(const std::string& text, const std::vector<std::string>& vars) {
    return parse_polynomial(text, vars);
}

ExponentVector E(std::vector<int> exponents) {
    return ExponentVector(std::move(exponents));
}

Point pt(const std::vector<long>& coords) {
    Point p;
    for (long c : coords) p.coordinates.push_back(Rational(c));
    return p;
}

std::set<ExponentVector> monomial_set(const std::vector<std::string>& monos,
                                      const std::vector<std::string>& vars) {
    std::set<ExponentVector> out;
    for (const std::string& m : monos) {
        Polynomial p = P(m, vars);
        if (p.term_count() != 1)
            throw std::invalid_argument("not a monomial: " + m);
        out.insert(p.terms().begin()->first);
    }
    return out;
}

int bareiss_rank(const Matrix& m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();

    // Clear denominators rowwise; rank is invariant under row scaling.
    std::vector<std::vector<mpz_class>> a(rows,
                                          std::vector<mpz_class>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i) {
        mpz_class scale = 1;
        for (std::size_t j = 0; j < cols; ++j)
            mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
                    m[i][j].denominator().get_mpz_t());
        for (std::size_t j = 0; j < cols; ++j)
            a[i][j] = m[i][j].numerator() * (scale / m[i][j].denominator());
    }

    mpz_class previous = 1;
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[r], a[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                mpz_class t = a[r][col] * a[i][j] - a[i][col] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(),
                             previous.get_mpz_t());
            }
            a[i][col] = 0;
        }
        previous = a[r][col];
        ++r;
    }
    return static_cast<int>(r);
}

bool ref_less(const MonomialOrdering& ord, const ExponentVector& a,
              const ExponentVector& b) {
    const auto& priority = ord.variable_priority();
    std::vector<long> ta, tb;
    auto degree = [](const ExponentVector& e) {
        long sum = 0;
        for (int i = 0; i < e.dimension(); ++i) sum += e[i];
        return sum;
    };
    switch (ord.kind()) {
        case OrderKind::Lex:
            break;
        case OrderKind::Grlex:
        case OrderKind::Grevlex:
            ta.push_back(degree(a));
            tb.push_back(degree(b));
            break;
    }
    if (ord.kind() == OrderKind::Grevlex) {
        for (auto it = priority.rbegin(); it != priority.rend(); ++it) {
            ta.push_back(-a[*it]);
            tb.push_back(-b[*it]);
        }
    } else {
        for (int v : priority) {
            ta.push_back(a[v]);
            tb.push_back(b[v]);
        }
    }
    return std::lexicographical_compare(ta.begin(), ta.end(), tb.begin(),
                                        tb.end());
}

Rational diff_apply_at_origin(const Polynomial& p, const Polynomial& f) {
    std::vector<Rational> origin(static_cast<size_t>(f.dimension()),
                                 Rational(0));
    Rational total(0);
    for (const auto& [alpha, c] : p.terms()) {
        Polynomial df = f;
        for (int v = 0; v < alpha.dimension(); ++v)
            for (int k = 0; k < alpha[v]; ++k) df = df.derivative(v);
        total += c * df.evaluate(origin);
    }
    return total;
}

ExponentVector random_exponent(SplitMix64& rng, int dimension,
                               int max_total_degree) {
    std::vector<int> e(static_cast<size_t>(dimension), 0);
    int remaining = rng.next_int(0, max_total_degree);
    for (int v = 0; v < dimension && remaining > 0; ++v) {
        e[static_cast<size_t>(v)] = rng.next_int(0, remaining);
        remaining -= e[static_cast<size_t>(v)];
    }
    // Spread the leftovers onto a random variable so full degrees occur.
    if (remaining > 0)
        e[static_cast<size_t>(rng.next_int(0, dimension - 1))] += remaining;
    return ExponentVector(std::move(e));
}

Polynomial random_polynomial(SplitMix64& rng, int dimension, int max_degree,
                             int max_terms, int coeff_range) {
    Polynomial p(dimension);
    int terms = rng.next_int(1, max_terms);
    for (int t = 0; t < terms; ++t) {
        int num = 0;
        while (num == 0) num = rng.next_int(-coeff_range, coeff_range);
        int den = rng.next_int(1, 3);
        p += Polynomial::monomial(random_exponent(rng, dimension, max_degree),
                                  Rational(num, den));
    }
    return p;
}

Polynomial random_nonzero_polynomial(SplitMix64& rng, int dimension,
                                     int max_degree, int max_terms,
                                     int coeff_range) {
    while (true) {
        Polynomial p =
            random_polynomial(rng, dimension, max_degree, max_terms, coeff_range);
        if (!p.is_zero()) return p;
    }
}

std::set<ExponentVector> random_lower_set(SplitMix64& rng, int dimension,
                                          int size) {
    std::set<ExponentVector> set{ExponentVector::zero(dimension)};
    while (static_cast<int>(set.size()) < size) {
        std::vector<ExponentVector> frontier;
        for (const ExponentVector& beta : set) {
            for (int v = 0; v < dimension; ++v) {
                ExponentVector c = beta.incremented(v);
                if (set.count(c)) continue;
                bool closed = true;
                for (int w = 0; w < dimension && closed; ++w)
                    if (c[w] > 0 && !set.count(c.decremented(w))) closed = false;
                if (closed) frontier.push_back(c);
            }
        }
        set.insert(frontier[static_cast<size_t>(
            rng.next_int(0, static_cast<int>(frontier.size()) - 1))]);
    }
    return set;
}

std::vector<Polynomial> derivative_closure(const Polynomial& p) {
    std::vector<Polynomial> all{p};
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (int v = 0; v < p.dimension(); ++v) {
            Polynomial d = all[i].derivative(v);
            if (d.is_zero()) continue;
            if (std::find(all.begin(), all.end(), d) == all.end())
                all.push_back(d);
        }
    }
    std::vector<Polynomial> independent;
    for (const Polynomial& candidate : all) {
        std::vector<Polynomial> trial = independent;
        trial.push_back(candidate);
        if (rank(coefficient_matrix(trial)) ==
            static_cast<int>(trial.size()))
            independent.push_back(candidate);
    }
    return independent;
}

bool same_polynomials(std::vector<Polynomial> a, std::vector<Polynomial> b) {
    if (a.size() != b.size()) return false;
    for (const Polynomial& p : a) {
        auto it = std::find(b.begin(), b.end(), p);
        if (it == b.end()) return false;
        b.erase(it);
    }
    return true;
}

MonomialOrdering random_priority_ordering(SplitMix64& rng, OrderKind kind,
                                          int dimension) {
    std::vector<int> priority(static_cast<size_t>(dimension));
    for (int i = 0; i < dimension; ++i) priority[static_cast<size_t>(i)] = i;
    for (int i = dimension - 1; i > 0; --i)
        std::swap(priority[static_cast<size_t>(i)],
                  priority[static_cast<size_t>(rng.next_int(0, i))]);
    return MonomialOrdering(kind, std::move(priority));
}

}  // namespace testsupport
