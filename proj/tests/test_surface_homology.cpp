#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "graphknot/slope_calculus.hpp"
#include "graphknot/surface_homology.hpp"

using namespace graphknot;

TEST_CASE("torus classes reduce to slopes") {
    CHECK(torus_class{6, 2}.slope() == rational(3));
    CHECK(torus_class{-9, -6}.slope() == rational(3, 2));
    CHECK_THROWS_AS((torus_class{0, 0}.slope()), std::domain_error);
    CHECK_THROWS_AS((torus_class{3, 0}.slope()), std::domain_error);
}

TEST_CASE("cable space boundary slopes") {
    // a = 0 forces both boundary slopes to 0
    auto z = cable_boundary_slopes(0, 1, 5, 2);
    CHECK(z.outer == rational(0));
    CHECK(z.inner == rational(0));

    // trefoil cabling-annulus slope 6 under the (13,2)-cable pattern
    auto t = cable_boundary_slopes(6, 1, 13, 2);
    CHECK(t.outer == rational(6));
    CHECK(t.inner == rational(24));
    CHECK(t.surface_class.d_copies == 6 * 2 - 13);
    CHECK(t.surface_class.a_copies == 1);

    CHECK_THROWS_AS(cable_boundary_slopes(0, 0, 5, 2), std::domain_error);
    CHECK_THROWS_AS(cable_boundary_slopes(2, 4, 5, 2), std::invalid_argument);
    CHECK_THROWS_AS(cable_boundary_slopes(1, 1, 4, 2), std::invalid_argument);
}

TEST_CASE("glued boundary classes across a connected sum") {
    // two slope-0 surfaces with m1 = m2 = 2, q1 = 2, q2 = 1
    auto g = glued_boundary_class(2, 0, 2, 2, 0, 1);
    CHECK(g.total.mu == 0);
    CHECK(g.total.lambda == 8);
    CHECK(g.component_slope == rational(0));
    CHECK(g.component_count == 8); // m1 m2 gcd(0, 2)

    // adding the zero slope is the identity
    auto id = glued_boundary_class(1, 7, 3, 1, 0, 1);
    CHECK(id.component_slope == rational(7, 3));

    auto h = glued_boundary_class(1, 1, 2, 1, 1, 3);
    CHECK(h.component_slope == rational(5, 6));
    CHECK(h.total.mu == 5);
    CHECK(h.total.lambda == 6);
    CHECK(h.component_count == 1);
}

static std::mt19937_64 rng(40);

static std::pair<std::int64_t, std::int64_t> random_reduced(std::int64_t a_max, std::int64_t b_max) {
    while (true) {
        std::int64_t a = std::int64_t(rng() % (2 * a_max + 1)) - a_max;
        std::int64_t b = 1 + std::int64_t(rng() % b_max);
        if (std::gcd(a < 0 ? -a : a, b) == 1) return {a, b};
    }
}

TEST_CASE("inner slope agrees with the cable transform on random classes") {
    for (int i = 0; i < 200; ++i) {
        auto [a, b] = random_reduced(40, 12);
        std::int64_t q = 2 + std::int64_t(rng() % 6);
        std::int64_t p;
        do {
            p = std::int64_t(rng() % 81) - 40;
        } while (std::gcd(p < 0 ? -p : p, q) != 1);
        auto cb = cable_boundary_slopes(a, b, p, q);
        CHECK(cb.outer == rational(a, b));
        CHECK(cb.inner == cable_transform(cb.outer, q));
    }
}

TEST_CASE("glued slope agrees with fraction addition on random classes") {
    for (int i = 0; i < 200; ++i) {
        auto [p1, q1] = random_reduced(30, 10);
        auto [p2, q2] = random_reduced(30, 10);
        std::int64_t m1 = 1 + std::int64_t(rng() % 5);
        std::int64_t m2 = 1 + std::int64_t(rng() % 5);
        auto g = glued_boundary_class(m1, p1, q1, m2, p2, q2);
        CHECK(g.component_slope == sum_slopes(rational(p1, q1), rational(p2, q2)));
        // symmetric in the two factors
        auto g2 = glued_boundary_class(m2, p2, q2, m1, p1, q1);
        CHECK(g2.component_slope == g.component_slope);
        CHECK(g2.component_count == g.component_count);
        // total class is the component count times the reduced slope class
        CHECK(g.total.mu == g.component_count * g.component_slope.num());
        CHECK(g.total.lambda == g.component_count * g.component_slope.den());
    }
}

TEST_CASE("homogeneity: scaling the class leaves slopes unchanged") {
    auto base = cable_boundary_slopes(3, 2, 7, 3);
    for (std::int64_t t = 2; t <= 5; ++t) {
        // scale (a,b) -> (ta, tb): the class is no longer reduced, so scale
        // the surface class directly and recompute boundary slopes
        torus_class outer{base.outer_class.mu * t, base.outer_class.lambda * t};
        torus_class inner{base.inner_class.mu * t, base.inner_class.lambda * t};
        CHECK(outer.slope() == base.outer);
        CHECK(inner.slope() == base.inner);
    }
}

TEST_CASE("H1 relations give a consistent inner slope") {
    // substituting [mu_V] = q[mu] and [la_V] = [la]/q into the outer class
    // aq[mu_V] + bq[la_V] gives aq^2[mu] + b[la], the inner class up to sign
    for (int i = 0; i < 100; ++i) {
        auto [a, b] = random_reduced(20, 8);
        std::int64_t q = 2 + std::int64_t(rng() % 5);
        std::int64_t p;
        do {
            p = std::int64_t(rng() % 41) - 20;
        } while (std::gcd(p < 0 ? -p : p, q) != 1);
        auto cb = cable_boundary_slopes(a, b, p, q);
        // outer = aq[mu_V] + bq[la_V]; push through the relations
        std::int64_t mu_coeff = cb.outer_class.mu * q;        // aq * q
        std::int64_t la_coeff = cb.outer_class.lambda / q;    // bq / q
        torus_class pushed{mu_coeff, la_coeff};
        CHECK(pushed.slope() == cb.inner);
    }
}
