// Integer homology arithmetic behind the slope rules.
//
// Cable space M_{p,q} (complement of the (p,q) pattern in a solid torus V,
// with cable knot k): relative second homology is generated by the q-times
// punctured meridian disk [D] and the annulus [A] joining the two boundary
// tori, with boundary data
//
//   [D . dV] = [mu_V]              [D . dN(k)] = -q [mu]
//   [A . dV] = p [mu_V] + q [la_V] [A . dN(k)] = -pq [mu] - [la]
//
// A class (aq - bp)[D] + b[A] therefore meets the outer torus in slope a/b
// and the inner torus in slope a q^2 / b, which is the cable transform.
//
// For a connected sum split along a swallow-follow annulus, gluing m2*q2
// copies of a slope-p1/q1 surface to m1*q1 copies of a slope-p2/q2 surface
// yields total boundary class m1 m2 ((p1 q2 + q1 p2)[mu] + q1 q2 [la]).
#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "graphknot/checked.hpp"
#include "graphknot/rational.hpp"

namespace graphknot {

// 1-cycle on a boundary torus in the (meridian, longitude) basis
struct torus_class {
    std::int64_t mu = 0;
    std::int64_t lambda = 0;

    // slope p/q of the curve family p[mu] + q[la], reduced
    rational slope() const {
        if (mu == 0 && lambda == 0) throw std::domain_error("slope of the zero homology class");
        if (lambda == 0) throw std::domain_error("meridional class has no finite slope");
        return rational(mu, lambda);
    }

    std::string str() const {
        return "(" + std::to_string(mu) + ")[mu] + (" + std::to_string(lambda) + ")[la]";
    }
};

// relative 2-class d[D] + a[A] in the cable space
struct cable_space_class {
    std::int64_t d_copies = 0;
    std::int64_t a_copies = 0;

    std::string str() const {
        return "(" + std::to_string(d_copies) + ")[D] + (" + std::to_string(a_copies) + ")[A]";
    }
};

struct cable_boundary {
    cable_space_class surface_class;
    torus_class outer_class; // on the companion torus dV
    torus_class inner_class; // on the cable knot torus dN(k)
    rational outer;          // a/b
    rational inner;          // a q^2 / b
};

inline cable_boundary cable_boundary_slopes(std::int64_t a, std::int64_t b, std::int64_t p,
                                            std::int64_t q) {
    if (a == 0 && b == 0) throw std::domain_error("cable_boundary_slopes: degenerate class a=b=0");
    if (b <= 0) throw std::invalid_argument("cable_boundary_slopes: requires b > 0");
    if (q <= 1) throw std::invalid_argument("cable_boundary_slopes: requires q > 1");
    if (std::gcd(a < 0 ? -a : a, b) != 1)
        throw std::invalid_argument("cable_boundary_slopes: a/b must be reduced");
    if (std::gcd(p < 0 ? -p : p, q) != 1)
        throw std::invalid_argument("cable_boundary_slopes: gcd(p,q)=1 required");

    cable_space_class cls{checked_sub(checked_mul(a, q), checked_mul(b, p)), b};

    // dV: (aq-bp)[mu_V] + b(p[mu_V] + q[la_V])
    torus_class outer{checked_add(cls.d_copies, checked_mul(cls.a_copies, p)),
                      checked_mul(cls.a_copies, q)};
    // dN(k): (aq-bp)(-q[mu]) + b(-pq[mu] - [la])
    torus_class inner{checked_sub(checked_mul(checked_neg(q), cls.d_copies),
                                  checked_mul(cls.a_copies, checked_mul(p, q))),
                      checked_neg(cls.a_copies)};

    return {cls, outer, inner, outer.slope(), inner.slope()};
}

struct glued_boundary {
    torus_class total;         // m1 m2 ((p1 q2 + q1 p2)[mu] + q1 q2 [la])
    rational component_slope;  // p1/q1 + p2/q2
    std::int64_t component_count; // m1 m2 gcd(p1 q2 + q1 p2, q1 q2)
};

// The (p_i, q_i) pairs need not be coprime: a slope-0 surface may still wrap
// q_i > 1 times longitudinally, and the class arithmetic is total either way.
inline glued_boundary glued_boundary_class(std::int64_t m1, std::int64_t p1, std::int64_t q1,
                                           std::int64_t m2, std::int64_t p2, std::int64_t q2) {
    if (m1 < 1 || m2 < 1) throw std::invalid_argument("glued_boundary_class: multiplicities must be positive");
    if (q1 < 1 || q2 < 1) throw std::invalid_argument("glued_boundary_class: q1, q2 must be positive");

    std::int64_t mu_total = checked_add(checked_mul(p1, q2), checked_mul(q1, p2));
    std::int64_t la_total = checked_mul(q1, q2);
    std::int64_t m = checked_mul(m1, m2);
    torus_class total{checked_mul(m, mu_total), checked_mul(m, la_total)};

    // gcd(0, q1q2) = q1q2, so a zero-slope sum still counts its components
    std::int64_t k = std::gcd(mu_total < 0 ? -mu_total : mu_total, la_total);
    return {total, rational(mu_total, la_total), checked_mul(m, k)};
}

} // namespace graphknot
