#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <vector>

#include "graphknot/laurent_oracle.hpp"

using namespace graphknot;

static laurent_poly from_terms(std::initializer_list<std::pair<std::int64_t, std::int64_t>> terms) {
    laurent_poly p;
    for (auto [e, c] : terms) p.add_term(e, c);
    return p;
}

TEST_CASE("laurent polynomial basics") {
    laurent_poly zero;
    CHECK(zero.is_zero());
    CHECK_THROWS_AS(zero.max_deg(), std::domain_error);

    laurent_poly f = from_terms({{2, 1}, {0, -1}}); // q^2 - 1
    laurent_poly g = from_terms({{2, 1}, {0, 1}});  // q^2 + 1
    CHECK(f * g == from_terms({{4, 1}, {0, -1}}));
    CHECK(f * laurent_poly::one() == f);
    CHECK(f + (-f) == laurent_poly{});
    CHECK(f.inverted() == from_terms({{-2, 1}, {0, -1}}));
    CHECK(f.shifted(3) == from_terms({{5, 1}, {3, -1}}));
    CHECK(f.str() == "q^2 - 1");
}

TEST_CASE("exact division") {
    laurent_poly num = from_terms({{4, 1}, {0, -1}});
    laurent_poly den = from_terms({{2, 1}, {0, -1}});
    CHECK(divide_exact(num, den) == from_terms({{2, 1}, {0, 1}}));
    CHECK(divide_exact(laurent_poly{}, den).is_zero());
    CHECK_THROWS_AS(divide_exact(from_terms({{2, 1}, {0, 1}}), from_terms({{1, 1}, {0, 1}})),
                    std::domain_error);
    CHECK_THROWS_AS(divide_exact(num, laurent_poly{}), std::domain_error);
    // divisor with negative exponents, as used by the cyclotomic sum
    laurent_poly den2 = from_terms({{2, 1}, {-2, -1}});
    CHECK(divide_exact(den2 * num, den2) == num);
}

TEST_CASE("degree additivity under multiplication") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 200; ++i) {
        laurent_poly f, g;
        for (int t = 0; t < 4; ++t) {
            f.add_term(std::int64_t(rng() % 21) - 10, std::int64_t(rng() % 9) - 4);
            g.add_term(std::int64_t(rng() % 21) - 10, std::int64_t(rng() % 9) - 4);
        }
        if (f.is_zero() || g.is_zero()) continue;
        laurent_poly prod = f * g;
        REQUIRE(!prod.is_zero()); // integer coefficients cannot cancel extremes
        CHECK(prod.max_deg() == f.max_deg() + g.max_deg());
        CHECK(prod.min_deg() == f.min_deg() + g.min_deg());
    }
}

TEST_CASE("colored Jones of torus knots hits the classical anchors") {
    // trefoil, color 2: the classical Jones polynomial q + q^3 - q^4
    laurent_poly tref = colored_jones_torus(2, 3, 2);
    CHECK(tref == from_terms({{4, -1}, {3, 1}, {1, 1}}));
    CHECK(tref.max_deg() == 4);
    CHECK(tref.min_deg() == 1);

    // T(3,5), color 2: t^4 + t^6 - t^10
    laurent_poly t35 = colored_jones_torus(3, 5, 2);
    CHECK(t35 == from_terms({{10, -1}, {6, 1}, {4, 1}}));
    CHECK(t35.max_deg() == 10);
    CHECK(t35.min_deg() == 4);

    // T(2,5), color 2: t^2 + t^4 - t^5 + t^6 - t^7
    CHECK(colored_jones_torus(2, 5, 2) ==
          from_terms({{7, -1}, {6, 1}, {5, -1}, {4, 1}, {2, 1}}));

    // color 1 is always the empty cabling
    for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {4, 5}, {5, 7}})
        CHECK(colored_jones_torus(p, q, 1) == laurent_poly::one());

    CHECK_THROWS_AS(colored_jones_torus(4, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(colored_jones_torus(2, 3, 0), std::invalid_argument);
}

TEST_CASE("the cyclotomic sum reproduces the rational-function Jones polynomial") {
    for (auto [p, q] : std::vector<std::pair<int, int>>{
             {2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}, {4, 5}, {5, 6}, {2, 9}, {7, 9}}) {
        CAPTURE(p, q);
        CHECK(colored_jones_torus(p, q, 2) == classical_jones_torus(p, q));
    }
}

TEST_CASE("oracle degrees equal the quasi-polynomial formulas for torus leaves") {
    for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}) {
        auto pair = torus_delta(p, q);
        for (std::int64_t n = 1; n <= 10; ++n) {
            CAPTURE(p, q, n);
            laurent_poly j = colored_jones_torus(p, q, n);
            CHECK(rational(j.max_deg()) == pair.delta.eval(n));
            CHECK(rational(j.min_deg()) == pair.delta_star.eval(n));
        }
    }
}

TEST_CASE("degrees of expressions: sums multiply, mirrors invert") {
    // additivity: max degree of T(2,3) # T(2,5) at n=3 is 11 + 19
    degree_pair d = degrees_of_expression(parse("T(2,3) # T(2,5)"), 3);
    CHECK(d.max_deg == 30);

    degree_pair m = degrees_of_expression(torus(-2, 3), 2);
    CHECK(m.max_deg == -1);
    CHECK(m.min_deg == -4);

    degree_pair u = degrees_of_expression(unknot(), 5);
    CHECK(u.max_deg == 0);
    CHECK(u.min_deg == 0);

    CHECK_THROWS_AS(degrees_of_expression(cable(13, 2, torus(2, 3)), 2), oracle_error);

    laurent_poly square = jones_of_expression(sum(torus(2, 3), torus(2, 3)), 2);
    CHECK(square == colored_jones_torus(2, 3, 2) * colored_jones_torus(2, 3, 2));
    CHECK(square.max_deg() == 8);
}

TEST_CASE("mirror normalization preserves the oracle polynomial") {
    std::vector<expr_ptr> exprs{
        torus(2, 3),
        sum(torus(2, 3), mirror(torus(2, 5))),
        mirror(sum(torus(2, 3), torus(3, 4))),
        mirror(mirror(sum(torus(-2, 3), torus(2, 5)))),
    };
    for (const auto& k : exprs) {
        CAPTURE(render(k));
        for (std::int64_t n = 1; n <= 4; ++n) {
            CHECK(jones_of_expression(normalize_mirrors(k), n) == jones_of_expression(k, n));
            CHECK(jones_of_expression(normalize_mirrors(mirror(k)), n) ==
                  jones_of_expression(k, n).inverted());
        }
    }
}

TEST_CASE("cross-validation against the engine quasi-polynomials") {
    cross_validate_report r1 = cross_validate(parse("T(2,3)"), 8);
    CHECK(r1.ok);
    REQUIRE(r1.fit_max.has_value());
    CHECK(*r1.fit_max == torus_delta(2, 3).delta);
    CHECK(*r1.fit_min == torus_delta(2, 3).delta_star);

    // period-2 constant term present and recovered exactly
    cross_validate_report r2 = cross_validate(parse("T(3,5)"), 8);
    CHECK(r2.ok);
    REQUIRE(r2.fit_max.has_value());
    CHECK(r2.fit_max->period() == 2);
    CHECK(r2.fit_max->c0()[0] - r2.fit_max->c0()[1] == rational(-3, 4));

    cross_validate_report r3 = cross_validate(parse("T(2,3) # T(3,4)"), 8);
    CHECK(r3.ok);
    CHECK(r3.engine_delta == torus_delta(2, 3).delta + torus_delta(3, 4).delta);

    cross_validate_report r4 = cross_validate(parse("mirror(T(2,3)) # T(2,5)"), 8);
    CHECK(r4.ok);

    CHECK_THROWS_AS(cross_validate(parse("C(13,2; T(2,3))"), 8), oracle_error);
    CHECK_THROWS_AS(cross_validate(parse("T(2,3)"), 4), std::invalid_argument);
}

TEST_CASE("a consistent oracle fit is stable under more colors") {
    cross_validate_report r8 = cross_validate(parse("T(3,4) # T(2,5)"), 8);
    cross_validate_report r10 = cross_validate(parse("T(3,4) # T(2,5)"), 10);
    REQUIRE(r8.ok);
    REQUIRE(r10.ok);
    CHECK(*r8.fit_max == *r10.fit_max);
    CHECK(*r8.fit_min == *r10.fit_min);
}
