// Deterministic pseudo-random generator of valid knot expressions, used by
// the batch command and by property tests. All draws go through mt19937_64
// with plain modulo reduction, so a fixed seed reproduces the same
// expressions bit for bit on every platform.
#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>

#include "graphknot/knot_expr.hpp"

namespace graphknot {

struct gen_options {
    int max_depth = 4;
    std::int64_t p_max = 50; // |p| bound for leaves and cables
    std::int64_t q_max = 7;
    bool wrap_mirrors = true; // occasionally insert mirror() nodes
};

namespace detail {

inline std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    // modulo bias is irrelevant for test-case generation
    return lo + std::int64_t(rng() % std::uint64_t(hi - lo + 1));
}

inline expr_ptr gen_torus_leaf(std::mt19937_64& rng, const gen_options& opts) {
    std::int64_t q = draw(rng, 2, opts.q_max);
    std::int64_t p = 0;
    do {
        p = draw(rng, 2, opts.p_max);
    } while (std::gcd(p, q) != 1);
    if (draw(rng, 0, 1) == 1) p = -p;
    return torus(p, q);
}

inline expr_ptr gen_expr(std::mt19937_64& rng, const gen_options& opts, int depth_left) {
    if (depth_left <= 1) return gen_torus_leaf(rng, opts);
    expr_ptr out;
    switch (draw(rng, 0, 9)) {
        case 0:
        case 1:
        case 2: // leaf
            out = gen_torus_leaf(rng, opts);
            break;
        case 3:
        case 4:
        case 5: { // connected sum
            out = sum(gen_expr(rng, opts, depth_left - 1), gen_expr(rng, opts, depth_left - 1));
            break;
        }
        default: { // cable
            std::int64_t q = draw(rng, 2, opts.q_max);
            std::int64_t p = 0;
            do {
                p = draw(rng, 1, opts.p_max);
            } while (std::gcd(p, q) != 1);
            if (draw(rng, 0, 1) == 1) p = -p;
            out = cable(p, q, gen_expr(rng, opts, depth_left - 1));
            break;
        }
    }
    if (opts.wrap_mirrors && draw(rng, 0, 7) == 0) out = mirror(out);
    return out;
}

} // namespace detail

inline expr_ptr random_expr(std::mt19937_64& rng, const gen_options& opts = {}) {
    if (opts.max_depth < 1) throw std::invalid_argument("random_expr: max_depth must be >= 1");
    // p_max >= max(3, q_max) guarantees every q in [2, q_max] has a coprime
    // partner in [2, p_max] (q-1, or 3 when q = 2), so the draw loops finish
    if (opts.q_max < 2 || opts.p_max < 3 || opts.p_max < opts.q_max)
        throw std::invalid_argument("random_expr: requires q_max >= 2 and p_max >= max(3, q_max)");
    return detail::gen_expr(rng, opts, opts.max_depth);
}

} // namespace graphknot
