#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <thread>

#include "support.hpp"

using namespace testsupport;

namespace {

const std::vector<Point> kThreePoints = {pt({0, 0}), pt({1, 2}), pt({2, 1})};

InterpolationProblem mixed_conditions_problem() {
    return InterpolationProblem{
        2,
        MonomialOrdering::grlex(2),
        {ConditionSpace{pt({0, 0}),
                        {P("1", XY), P("x", XY), P("1/2*x^2 + y", XY)}},
         ConditionSpace{pt({1, 2}), {P("1", XY), P("x", XY)}}}};
}

}  // namespace

TEST_CASE("three-point Lagrange golden result") {
    GroebnerResult r =
        groebner_lagrange(kThreePoints, MonomialOrdering::grlex(2));
    CHECK(r.quotient_basis.monomials == monomial_set({"1", "y", "x"}, XY));
    CHECK(std::set<ExponentVector>(r.leading_monomials.begin(),
                                   r.leading_monomials.end()) ==
          monomial_set({"y^2", "x*y", "x^2"}, XY));
    CHECK(same_polynomials(r.basis,
                           {P("y^2 + 2/3*x - 7/3*y", XY),
                            P("x*y - 2/3*x - 2/3*y", XY),
                            P("x^2 - 7/3*x + 2/3*y", XY)}));
}

TEST_CASE("single point at the origin") {
    GroebnerResult r =
        groebner_lagrange({pt({0, 0})}, MonomialOrdering::grlex(2));
    CHECK(r.quotient_basis.monomials == monomial_set({"1"}, XY));
    CHECK(same_polynomials(r.basis, {P("x", XY), P("y", XY)}));
}

TEST_CASE("five-point instances match the evaluation oracle") {
    SplitMix64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Point> points = random_distinct_points(rng, 2, 5, 5);
        for (OrderKind kind :
             {OrderKind::Lex, OrderKind::Grlex, OrderKind::Grevlex}) {
            MonomialOrdering ord = random_priority_ordering(rng, kind, 2);
            GroebnerResult a = groebner_lagrange(points, ord);
            GroebnerResult b = bm_vanishing_ideal(points, ord);
            CHECK(results_equal(a, b));
        }
    }
}

TEST_CASE("one-dimensional basis is the expanded root product") {
    SplitMix64 rng(42);
    for (int trial = 0; trial < 20; ++trial) {
        int n = rng.next_int(1, 6);
        std::vector<Point> points = random_distinct_points(rng, 1, n, 9);
        GroebnerResult r = groebner_lagrange(points, MonomialOrdering::lex(1));
        REQUIRE(r.basis.size() == 1);

        Polynomial product = P("1", X);
        for (const Point& p : points)
            product = product * (P("x", X) -
                                 Polynomial::constant(1, p.coordinates[0]));
        CHECK(r.basis[0] == product);
    }
}

TEST_CASE("degenerate point configurations agree with the oracle") {
    std::vector<std::vector<Point>> configs = {
        {pt({0, 0}), pt({0, 1}), pt({0, 2})},           // collinear on an axis
        {pt({1, 1}), pt({2, 2}), pt({3, 3}), pt({4, 4})},  // diagonal
        {pt({0, 0}), pt({0, 1}), pt({1, 0}), pt({1, 1})},  // full grid
        {pt({-3, 5}), pt({-3, -5}), pt({3, 5})},
    };
    for (const auto& points : configs) {
        for (OrderKind kind :
             {OrderKind::Lex, OrderKind::Grlex, OrderKind::Grevlex}) {
            for (std::vector<int> priority :
                 {std::vector<int>{0, 1}, std::vector<int>{1, 0}}) {
                MonomialOrdering ord(kind, priority);
                GroebnerResult r = groebner_lagrange(points, ord);
                CHECK(results_equal(r, bm_vanishing_ideal(points, ord)));
                for (const Polynomial& g : r.basis)
                    for (const Point& p : points)
                        CHECK(g.evaluate(p.coordinates).is_zero());
            }
        }
    }
}

TEST_CASE("rational coordinates work end to end") {
    auto q = [](const char* s) { return Rational::from_string(s); };
    std::vector<Point> points = {Point{{q("1/2"), q("0")}},
                                 Point{{q("0"), q("2/3")}},
                                 Point{{q("-1/2"), q("1/3")}},
                                 Point{{q("1"), q("1")}}};
    MonomialOrdering ord(OrderKind::Lex, {1, 0});
    GroebnerResult r = groebner_lagrange(points, ord);
    CHECK(results_equal(r, bm_vanishing_ideal(points, ord)));
    CHECK(r.quotient_basis.size() == 4);
    CHECK(is_reduced_groebner(r).certified());
    for (const Polynomial& g : r.basis)
        for (const Point& p : points)
            CHECK(g.evaluate(p.coordinates).is_zero());
}

TEST_CASE("Hermite golden result") {
    GroebnerResult r = groebner_hermite(mixed_conditions_problem());
    CHECK(r.quotient_basis.monomials ==
          monomial_set({"1", "x", "y", "y^2", "x*y"}, XY));
    CHECK(std::set<ExponentVector>(r.leading_monomials.begin(),
                                   r.leading_monomials.end()) ==
          monomial_set({"y^3", "x*y^2", "x^2"}, XY));
    CHECK(same_polynomials(r.basis,
                           {P("y^3 - 2*y^2", XY), P("x*y^2 - 2*x*y", XY),
                            P("x^2 - x*y + 3/4*y^2 - y", XY)}));
}

TEST_CASE("Lagrange encoded as Hermite gives the identical result") {
    SplitMix64 rng(43);
    for (int trial = 0; trial < 15; ++trial) {
        int d = rng.next_int(1, 3);
        int n = rng.next_int(1, 6);
        std::vector<Point> points = random_distinct_points(rng, d, n, 5);
        OrderKind kind = static_cast<OrderKind>(rng.next_int(0, 2));
        MonomialOrdering ord = random_priority_ordering(rng, kind, d);

        std::vector<ConditionSpace> spaces;
        for (const Point& p : points)
            spaces.push_back(
                ConditionSpace{p, {Polynomial::constant(d, Rational(1))}});
        InterpolationProblem problem{d, ord, spaces};

        CHECK(results_equal(groebner_lagrange(points, ord),
                            groebner_hermite(problem)));
    }
}

TEST_CASE("first-order conditions at the origin") {
    InterpolationProblem problem{
        2,
        MonomialOrdering::grlex(2),
        {ConditionSpace{pt({0, 0}), {P("1", XY), P("x", XY), P("y", XY)}}}};
    GroebnerResult r = groebner_hermite(problem);
    CHECK(r.quotient_basis.monomials == monomial_set({"1", "x", "y"}, XY));
    CHECK(same_polynomials(r.basis,
                           {P("x^2", XY), P("x*y", XY), P("y^2", XY)}));

    // Independent annihilation evidence plus unisolvence.
    for (const Polynomial& g : r.basis)
        for (const Polynomial& p : problem.conditions[0].generators)
            CHECK(apply_functional(p, g).is_zero());
    std::vector<ExponentVector> cols(r.quotient_basis.monomials.begin(),
                                     r.quotient_basis.monomials.end());
    CHECK(nonsingular(
        functional_matrix(problem.conditions[0].generators, cols)));
}

TEST_CASE("every basis element is annihilated by every functional") {
    SplitMix64 rng(44);
    for (int trial = 0; trial < 20; ++trial) {
        int d = rng.next_int(1, 3);
        int k = rng.next_int(1, 2);
        std::vector<ConditionSpace> spaces;
        SplitMix64 prng(rng.next());
        std::vector<Point> points = random_distinct_points(prng, d, k, 4);
        for (const Point& p : points)
            spaces.push_back(ConditionSpace{
                p, derivative_closure(random_nonzero_polynomial(rng, d, 2, 3, 5))});
        InterpolationProblem problem{d, MonomialOrdering::grlex(d), spaces};
        if (problem.functional_count() > 8) continue;

        GroebnerResult r = groebner_hermite(problem);
        CHECK(static_cast<int>(r.quotient_basis.size()) ==
              problem.functional_count());
        for (const Polynomial& g : r.basis) {
            // Direct substitution route, not apply_functional.
            for (const ConditionSpace& space : problem.conditions)
                for (const Polynomial& p : space.generators)
                    CHECK(apply_condition_at_point(space.point, p, g).is_zero());
        }

        // Lagrange vanishing via plain evaluation as well.
        if (problem.is_lagrange())
            for (const Polynomial& g : r.basis)
                for (const Point& p : problem.points())
                    CHECK(g.evaluate(p.coordinates).is_zero());
    }
}

TEST_CASE("results do not depend on condition order") {
    SplitMix64 rng(45);
    InterpolationProblem problem = mixed_conditions_problem();
    GroebnerResult reference = groebner_hermite(problem);
    for (int trial = 0; trial < 10; ++trial) {
        InterpolationProblem shuffled = problem;
        for (std::size_t i = shuffled.conditions.size() - 1; i > 0; --i)
            std::swap(shuffled.conditions[i],
                      shuffled.conditions[static_cast<size_t>(
                          rng.next_int(0, static_cast<int>(i)))]);
        for (ConditionSpace& space : shuffled.conditions) {
            for (std::size_t i = space.generators.size() - 1; i > 0; --i)
                std::swap(space.generators[i],
                          space.generators[static_cast<size_t>(
                              rng.next_int(0, static_cast<int>(i)))]);
            // Keep spans intact: generator order may change freely only when
            // the space stays D-invariant, which permutations preserve.
        }
        CHECK(results_equal(reference, groebner_hermite(shuffled)));
    }

    GroebnerResult lagrange_ref =
        groebner_lagrange(kThreePoints, MonomialOrdering::grlex(2));
    std::vector<Point> pts = kThreePoints;
    std::reverse(pts.begin(), pts.end());
    CHECK(results_equal(lagrange_ref,
                        groebner_lagrange(pts, MonomialOrdering::grlex(2))));
}

TEST_CASE("quotient bases are minimal under the requested ordering") {
    SplitMix64 rng(46);
    for (int trial = 0; trial < 10; ++trial) {
        int d = 2;
        int n = rng.next_int(2, 5);
        SplitMix64 prng(rng.next());
        std::vector<Point> points = random_distinct_points(prng, d, n, 4);
        OrderKind kind = static_cast<OrderKind>(rng.next_int(0, 2));
        MonomialOrdering ord = random_priority_ordering(rng, kind, d);

        GroebnerResult r = groebner_lagrange(points, ord);
        std::vector<Polynomial> shifted;
        for (const Point& p : points)
            shifted.push_back(truncated_exponential(p, n));
        CHECK(is_minimal_basis(ord, r.quotient_basis, shifted));
    }
}

TEST_CASE("error surface") {
    MonomialOrdering ord = MonomialOrdering::grlex(2);
    CHECK_THROWS_AS(groebner_lagrange({pt({1, 1}), pt({1, 1})}, ord),
                    DuplicatePointError);
    CHECK_THROWS_AS(groebner_lagrange({}, ord), InvalidProblemError);
    CHECK_THROWS_AS(
        groebner_lagrange({pt({1, 1}), Point{{Rational(1)}}}, ord),
        DimensionMismatchError);

    InterpolationProblem dependent{
        2,
        ord,
        {ConditionSpace{pt({0, 0}), {P("x", XY), P("2*x", XY)}}}};
    CHECK_THROWS_AS(groebner_hermite(dependent, true), LinearDependenceError);

    InterpolationProblem not_invariant{
        2, ord, {ConditionSpace{pt({0, 0}), {P("x^2", XY), P("1", XY)}}}};
    CHECK_THROWS_AS(groebner_hermite(not_invariant),
                    DInvarianceViolationError);
    // With validation skipped, the misuse still trips the downstream
    // lower-set guard: the least monomials are {1, x^2}.
    CHECK_THROWS_AS(groebner_hermite(not_invariant, true),
                    MalformedConditionsError);

    // A skipped violation whose least monomials do form a lower set runs
    // through; the output is then only a formal basis.
    InterpolationProblem skipped{
        2, ord, {ConditionSpace{pt({0, 0}), {P("1", XY), P("x + x^2", XY)}}}};
    CHECK_THROWS_AS(groebner_hermite(skipped), DInvarianceViolationError);
    CHECK_NOTHROW(groebner_hermite(skipped, true));
}

TEST_CASE("independent problems run in parallel threads") {
    // One instance set per thread, each checked against the sequential
    // oracle; values are immutable and nothing is shared.
    std::atomic<int> mismatches{0};
    std::vector<std::thread> workers;
    for (int t = 0; t < 4; ++t) {
        workers.emplace_back([t, &mismatches] {
            SplitMix64 rng(600 + static_cast<std::uint64_t>(t));
            for (int trial = 0; trial < 8; ++trial) {
                int d = rng.next_int(1, 3);
                int n = rng.next_int(2, 6);
                std::vector<Point> points =
                    random_distinct_points(rng, d, n, 5);
                MonomialOrdering ord = random_priority_ordering(
                    rng, static_cast<OrderKind>(rng.next_int(0, 2)), d);
                if (!results_equal(groebner_lagrange(points, ord),
                                   bm_vanishing_ideal(points, ord)))
                    ++mismatches;
            }
        });
    }
    for (std::thread& w : workers) w.join();
    CHECK(mismatches == 0);
}

TEST_CASE("interpolation through the quotient basis") {
    InterpolationProblem problem{
        2,
        MonomialOrdering::grlex(2),
        {ConditionSpace{pt({0, 0}), {P("1", XY)}},
         ConditionSpace{pt({1, 2}), {P("1", XY)}},
         ConditionSpace{pt({2, 1}), {P("1", XY)}}}};

    CHECK(interpolate(problem, {Rational(0), Rational(0), Rational(0)})
              .is_zero());
    CHECK(interpolate(problem, {Rational(1), Rational(1), Rational(1)}) ==
          P("1", XY));

    Polynomial cardinal =
        interpolate(problem, {Rational(0), Rational(1), Rational(0)});
    CHECK(cardinal.evaluate(pt({0, 0}).coordinates).is_zero());
    CHECK(cardinal.evaluate(pt({1, 2}).coordinates) == Rational(1));
    CHECK(cardinal.evaluate(pt({2, 1}).coordinates).is_zero());
    for (const auto& [alpha, c] : cardinal.terms())
        CHECK(monomial_set({"1", "y", "x"}, XY).count(alpha) == 1);
}

TEST_CASE("Hermite interpolation matches prescribed derivative values") {
    InterpolationProblem problem = mixed_conditions_problem();
    std::vector<Rational> values = {Rational(3), Rational(-1), Rational(2),
                                    Rational(5), Rational(1, 2)};
    Polynomial g = interpolate(problem, values);

    std::size_t i = 0;
    for (const ConditionSpace& space : problem.conditions)
        for (const Polynomial& p : space.generators)
            CHECK(apply_condition_at_point(space.point, p, g) == values[i++]);
}
