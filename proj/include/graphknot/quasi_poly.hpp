// Quadratic quasi-polynomials with periodic exact-rational coefficients:
//
//   f(n) = c2(n) n^2 + c1(n) n + c0(n)
//
// where each c_i is periodic with a common integral period. Coefficients are
// stored per residue class and read at index n mod period, so the class with
// index 0 holds the even-n values when the period is 2. Instances are always
// canonicalized to the minimal period.
#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graphknot/rational.hpp"
#include "graphknot/slope_set.hpp"

namespace graphknot {

class quasi_poly {
public:
    quasi_poly() : c2_(1), c1_(1), c0_(1) {}

    quasi_poly(std::vector<rational> c2, std::vector<rational> c1, std::vector<rational> c0)
        : c2_(std::move(c2)), c1_(std::move(c1)), c0_(std::move(c0)) {
        if (c2_.empty() || c2_.size() != c1_.size() || c1_.size() != c0_.size())
            throw std::invalid_argument("quasi_poly: coefficient arrays must share a positive length");
        canonicalize();
    }

    // constant-coefficient quadratic
    quasi_poly(const rational& c2, const rational& c1, const rational& c0)
        : c2_{c2}, c1_{c1}, c0_{c0} {}

    std::size_t period() const { return c2_.size(); }
    const std::vector<rational>& c2() const { return c2_; }
    const std::vector<rational>& c1() const { return c1_; }
    const std::vector<rational>& c0() const { return c0_; }

    rational c2_at(std::int64_t n) const { return c2_[idx(n)]; }
    rational c1_at(std::int64_t n) const { return c1_[idx(n)]; }
    rational c0_at(std::int64_t n) const { return c0_[idx(n)]; }

    bool is_zero() const {
        return period() == 1 && c2_[0].is_zero() && c1_[0].is_zero() && c0_[0].is_zero();
    }

    rational eval(std::int64_t n) const {
        if (n < 1) throw std::domain_error("quasi_poly::eval: n must be >= 1");
        std::size_t i = idx(n);
        rational nn(n);
        return c2_[i] * nn * nn + c1_[i] * nn + c0_[i];
    }

    friend quasi_poly operator+(const quasi_poly& f, const quasi_poly& g) {
        std::size_t pi = std::lcm(f.period(), g.period());
        std::vector<rational> c2(pi), c1(pi), c0(pi);
        for (std::size_t i = 0; i < pi; ++i) {
            c2[i] = f.c2_[i % f.period()] + g.c2_[i % g.period()];
            c1[i] = f.c1_[i % f.period()] + g.c1_[i % g.period()];
            c0[i] = f.c0_[i % f.period()] + g.c0_[i % g.period()];
        }
        return quasi_poly(std::move(c2), std::move(c1), std::move(c0));
    }

    quasi_poly operator-() const {
        std::vector<rational> c2(period()), c1(period()), c0(period());
        for (std::size_t i = 0; i < period(); ++i) {
            c2[i] = -c2_[i];
            c1[i] = -c1_[i];
            c0[i] = -c0_[i];
        }
        return quasi_poly(std::move(c2), std::move(c1), std::move(c0));
    }

    // { 4*c2(n) : n mod period }, the candidate slope set of the leading term
    slope_set leading_set() const {
        slope_set out;
        for (const auto& c : c2_) out.insert(rational(4) * c);
        return out;
    }

    friend bool operator==(const quasi_poly& f, const quasi_poly& g) {
        return f.c2_ == g.c2_ && f.c1_ == g.c1_ && f.c0_ == g.c0_;
    }

    std::string str() const {
        std::ostringstream os;
        os << "period " << period();
        for (std::size_t i = 0; i < period(); ++i)
            os << " | [" << i << "] " << c2_[i].str() << " n^2 + " << c1_[i].str() << " n + "
               << c0_[i].str();
        return os.str();
    }

private:
    std::size_t idx(std::int64_t n) const {
        std::int64_t m = n % std::int64_t(period());
        if (m < 0) m += std::int64_t(period());
        return std::size_t(m);
    }

    void canonicalize() {
        std::size_t pi = c2_.size();
        for (std::size_t d = 1; d < pi; ++d) {
            if (pi % d != 0) continue;
            bool ok = true;
            for (std::size_t i = d; i < pi && ok; ++i)
                ok = c2_[i] == c2_[i % d] && c1_[i] == c1_[i % d] && c0_[i] == c0_[i % d];
            if (ok) {
                c2_.resize(d);
                c1_.resize(d);
                c0_.resize(d);
                return;
            }
        }
    }

    std::vector<rational> c2_, c1_, c0_;
};

// delta and delta* of the positive (p,q) torus knot:
//
//   delta(n)  = (pq/4) n^2 - (1/2) n - (pq-2)/4 - (1+(-1)^n)(p-2)(q-2)/8
//   delta*(n) = ((p-1)(q-1)/2) n - (p-1)(q-1)/2
//
// The (1+(-1)^n) term contributes only for even n, i.e. residue class 0.
struct torus_delta_pair {
    quasi_poly delta;
    quasi_poly delta_star;
};

inline torus_delta_pair torus_delta(std::int64_t p, std::int64_t q) {
    if (p < 2 || q < 2 || std::gcd(p, q) != 1)
        throw std::invalid_argument("torus_delta: requires p,q >= 2 and gcd(p,q)=1");
    rational pq = rational(p) * rational(q);
    rational c2 = pq / rational(4);
    rational c1(-1, 2);
    rational c0_base = -(pq - rational(2)) / rational(4);
    rational parity = rational((p - 2)) * rational((q - 2)) / rational(4);
    quasi_poly delta({c2, c2}, {c1, c1}, {c0_base - parity, c0_base});
    rational half_prod = rational(p - 1) * rational(q - 1) / rational(2);
    quasi_poly delta_star(rational(0), half_prod, -half_prod);
    return {std::move(delta), std::move(delta_star)};
}

// --- exact fitting -----------------------------------------------------------

class fit_error : public std::runtime_error {
public:
    explicit fit_error(const std::string& what, std::optional<std::int64_t> offending_n = std::nullopt)
        : std::runtime_error(what), offending_n_(offending_n) {}
    std::optional<std::int64_t> offending_n() const { return offending_n_; }

private:
    std::optional<std::int64_t> offending_n_;
};

namespace detail {

// Solve the 3x3 system [n^2 n 1][c2 c1 c0]^T = y exactly for three distinct n.
inline std::array<rational, 3> solve_quadratic_through(const std::array<std::int64_t, 3>& ns,
                                                       const std::array<rational, 3>& ys) {
    rational a[3][4];
    for (int r = 0; r < 3; ++r) {
        rational n(ns[r]);
        a[r][0] = n * n;
        a[r][1] = n;
        a[r][2] = rational(1);
        a[r][3] = ys[r];
    }
    for (int col = 0; col < 3; ++col) {
        int pivot = -1;
        for (int r = col; r < 3; ++r)
            if (!a[r][col].is_zero()) { pivot = r; break; }
        if (pivot < 0) throw fit_error("fit: singular sample matrix");
        for (int c = 0; c < 4; ++c) std::swap(a[col][c], a[pivot][c]);
        for (int r = 0; r < 3; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            rational factor = a[r][col] / a[col][col];
            for (int c = col; c < 4; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    return {a[0][3] / a[0][0], a[1][3] / a[1][1], a[2][3] / a[2][2]};
}

} // namespace detail

// Fit the unique quadratic quasi-polynomial of the given period through exact
// samples (n, value). Needs at least three distinct n per residue class; all
// remaining samples are verified against the fit and any inconsistency is an
// error, never averaged away.
inline quasi_poly fit_from_samples(const std::vector<std::pair<std::int64_t, rational>>& samples,
                                   std::size_t period) {
    if (period < 1) throw std::invalid_argument("fit_from_samples: period must be positive");
    std::vector<rational> c2(period), c1(period), c0(period);
    for (std::size_t r = 0; r < period; ++r) {
        std::vector<std::pair<std::int64_t, rational>> in_class;
        for (const auto& [n, y] : samples)
            if (std::size_t(((n % std::int64_t(period)) + std::int64_t(period)) % std::int64_t(period)) == r)
                in_class.push_back({n, y});
        std::array<std::int64_t, 3> ns{};
        std::array<rational, 3> ys{};
        int got = 0;
        for (const auto& [n, y] : in_class) {
            bool seen = false;
            for (int i = 0; i < got; ++i) seen = seen || ns[i] == n;
            if (seen) continue;
            ns[got] = n;
            ys[got] = y;
            if (++got == 3) break;
        }
        if (got < 3)
            throw fit_error("fit: underdetermined system, residue class " + std::to_string(r) +
                            " mod " + std::to_string(period) + " has fewer than 3 distinct samples");
        auto sol = detail::solve_quadratic_through(ns, ys);
        c2[r] = sol[0];
        c1[r] = sol[1];
        c0[r] = sol[2];
        for (const auto& [n, y] : in_class) {
            rational predicted = sol[0] * rational(n) * rational(n) + sol[1] * rational(n) + sol[2];
            if (predicted != y)
                throw fit_error("fit: inconsistent sample at n=" + std::to_string(n) + ": expected " +
                                    predicted.str() + ", got " + y.str(),
                                n);
        }
    }
    return quasi_poly(std::move(c2), std::move(c1), std::move(c0));
}

} // namespace graphknot
