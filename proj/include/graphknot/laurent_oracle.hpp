// Independent ground truth for degree computations: exact integer Laurent
// polynomials, colored Jones polynomials of torus knots, and degree
// cross-validation against the quasi-polynomial engine.
//
// The torus-knot polynomial is computed from the classical cyclotomic sum
// (variable written v = q^{1/4} so every exponent is an integer):
//
//   J_{T(p,q),n} = v^{pq(1-n^2)} * sum_{k=-(n-1),step 2}^{n-1}
//                    (v^{pq k^2 + 2(p+q)k + 2} - v^{pq k^2 + 2(p-q)k - 2})
//                  / (v^{2n} - v^{-2n})
//
// followed by variable inversion, which lands in the convention where n = 1
// gives 1 and n = 2 gives the classical Jones polynomial
//
//   V_{T(p,q)}(t) = t^{(p-1)(q-1)/2} (1 - t^{p+1} - t^{q+1} + t^{p+q}) / (1 - t^2)
//
// with positive degrees for positive torus knots. The division is exact and
// all v-exponents of the result must be multiples of 4; any violation is a
// calibration failure and is reported, never rounded away.
#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "graphknot/checked.hpp"
#include "graphknot/knot_expr.hpp"
#include "graphknot/quasi_poly.hpp"
#include "graphknot/slope_calculus.hpp"

namespace graphknot {

class laurent_poly {
public:
    laurent_poly() = default;

    static laurent_poly monomial(std::int64_t exponent, std::int64_t coefficient = 1) {
        laurent_poly p;
        if (coefficient != 0) p.coeffs_[exponent] = coefficient;
        return p;
    }
    static laurent_poly one() { return monomial(0, 1); }

    const std::map<std::int64_t, std::int64_t>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    std::int64_t coeff(std::int64_t exponent) const {
        auto it = coeffs_.find(exponent);
        return it == coeffs_.end() ? 0 : it->second;
    }

    std::int64_t max_deg() const {
        if (is_zero()) throw std::domain_error("degree of the zero polynomial");
        return coeffs_.rbegin()->first;
    }
    std::int64_t min_deg() const {
        if (is_zero()) throw std::domain_error("degree of the zero polynomial");
        return coeffs_.begin()->first;
    }

    void add_term(std::int64_t exponent, std::int64_t coefficient) {
        auto [it, inserted] = coeffs_.try_emplace(exponent, coefficient);
        if (!inserted) {
            it->second = checked_add(it->second, coefficient);
            if (it->second == 0) coeffs_.erase(it);
        } else if (coefficient == 0) {
            coeffs_.erase(it);
        }
    }

    friend laurent_poly operator+(const laurent_poly& f, const laurent_poly& g) {
        laurent_poly out = f;
        for (const auto& [e, c] : g.coeffs_) out.add_term(e, c);
        return out;
    }
    friend laurent_poly operator-(const laurent_poly& f, const laurent_poly& g) {
        laurent_poly out = f;
        for (const auto& [e, c] : g.coeffs_) out.add_term(e, checked_neg(c));
        return out;
    }
    friend laurent_poly operator*(const laurent_poly& f, const laurent_poly& g) {
        laurent_poly out;
        for (const auto& [ef, cf] : f.coeffs_)
            for (const auto& [eg, cg] : g.coeffs_)
                out.add_term(checked_add(ef, eg), checked_mul(cf, cg));
        return out;
    }

    laurent_poly operator-() const {
        laurent_poly out;
        for (const auto& [e, c] : coeffs_) out.coeffs_[e] = checked_neg(c);
        return out;
    }

    // q -> q^{-1}
    laurent_poly inverted() const {
        laurent_poly out;
        for (const auto& [e, c] : coeffs_) out.coeffs_[checked_neg(e)] = c;
        return out;
    }

    // multiply by q^shift
    laurent_poly shifted(std::int64_t shift) const {
        laurent_poly out;
        for (const auto& [e, c] : coeffs_) out.coeffs_[checked_add(e, shift)] = c;
        return out;
    }

    friend bool operator==(const laurent_poly& f, const laurent_poly& g) {
        return f.coeffs_ == g.coeffs_;
    }

    std::string str(const std::string& var = "q") const {
        if (is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            auto [e, c] = *it;
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            std::int64_t a = c < 0 ? -c : c;
            if (a != 1 || e == 0) os << a;
            if (e != 0) {
                os << var;
                if (e != 1) os << "^" << e;
            }
            first = false;
        }
        return os.str();
    }

private:
    std::map<std::int64_t, std::int64_t> coeffs_; // exponent -> nonzero coefficient
};

// Exact Laurent division; throws std::domain_error when the division leaves a
// remainder.
inline laurent_poly divide_exact(const laurent_poly& numerator, const laurent_poly& divisor) {
    if (divisor.is_zero()) throw std::domain_error("laurent division by zero");
    if (numerator.is_zero()) return {};
    laurent_poly quotient;
    laurent_poly rem = numerator;
    const std::int64_t d_max = divisor.max_deg();
    const std::int64_t d_lead = divisor.coeff(d_max);
    // exponents of an exact quotient live in [n_min - d_min, n_max - d_max]
    const std::int64_t min_quotient_exp = checked_sub(numerator.min_deg(), divisor.min_deg());
    while (!rem.is_zero()) {
        std::int64_t e = checked_sub(rem.max_deg(), d_max);
        std::int64_t c = rem.coeff(rem.max_deg());
        if (e < min_quotient_exp || c % d_lead != 0)
            throw std::domain_error("laurent division is not exact");
        laurent_poly term = laurent_poly::monomial(e, c / d_lead);
        quotient = quotient + term;
        rem = rem - term * divisor;
    }
    return quotient;
}

class oracle_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class calibration_error : public oracle_error {
public:
    calibration_error(std::int64_t p, std::int64_t q, std::int64_t n, const std::string& what)
        : oracle_error("colored Jones calibration failure at (p,q,n)=(" + std::to_string(p) + "," +
                       std::to_string(q) + "," + std::to_string(n) + "): " + what) {}
};

// Colored Jones polynomial of the positive (p,q) torus knot, color n, with
// J_{K,1} = 1 and J_{K,2} the classical Jones polynomial.
inline laurent_poly colored_jones_torus(std::int64_t p, std::int64_t q, std::int64_t n) {
    if (p < 2 || q < 2 || std::gcd(p, q) != 1)
        throw std::invalid_argument("colored_jones_torus: requires p,q >= 2 and gcd(p,q)=1");
    if (n < 1) throw std::invalid_argument("colored_jones_torus: requires n >= 1");

    laurent_poly sum; // v = q^{1/4} units
    for (std::int64_t k = -(n - 1); k <= n - 1; k += 2) {
        std::int64_t kk = checked_mul(k, k);
        std::int64_t quad = checked_mul(checked_mul(p, q), kk);
        sum.add_term(checked_add(quad, checked_add(checked_mul(2, checked_mul(p + q, k)), 2)), 1);
        sum.add_term(checked_add(quad, checked_sub(checked_mul(2, checked_mul(p - q, k)), 2)), -1);
    }
    laurent_poly numerator = sum.shifted(checked_mul(checked_mul(p, q), 1 - checked_mul(n, n)));
    laurent_poly denominator =
        laurent_poly::monomial(2 * n, 1) + laurent_poly::monomial(-2 * n, -1);

    laurent_poly quarter;
    try {
        quarter = divide_exact(numerator, denominator);
    } catch (const std::domain_error& e) {
        throw calibration_error(p, q, n, e.what());
    }
    quarter = quarter.inverted();

    laurent_poly out;
    for (const auto& [e, c] : quarter.coeffs()) {
        if (e % 4 != 0)
            throw calibration_error(p, q, n,
                                    "non-integer degree " + std::to_string(e) + "/4 in result");
        out.add_term(e / 4, c);
    }
    return out;
}

// Classical Jones polynomial of the positive (p,q) torus knot via the
// rational-function formula; independent of the cyclotomic sum above.
inline laurent_poly classical_jones_torus(std::int64_t p, std::int64_t q) {
    if (p < 2 || q < 2 || std::gcd(p, q) != 1)
        throw std::invalid_argument("classical_jones_torus: requires p,q >= 2 and gcd(p,q)=1");
    laurent_poly numerator = laurent_poly::one() - laurent_poly::monomial(p + 1) -
                             laurent_poly::monomial(q + 1) + laurent_poly::monomial(p + q);
    laurent_poly denominator = laurent_poly::one() - laurent_poly::monomial(2);
    std::int64_t shift = checked_mul(p - 1, q - 1) / 2;
    return divide_exact(numerator, denominator).shifted(shift);
}

// Colored Jones polynomial of a cable-free expression: multiplicative under
// connected sum, variable-inverted under mirroring.
inline laurent_poly jones_of_expression(const expr_ptr& k, std::int64_t n) {
    return std::visit(
        overloaded{
            [&](const unknot_node&) { return laurent_poly::one(); },
            [&](const torus_node& t) {
                if (t.p > 0) return colored_jones_torus(t.p, t.q, n);
                return colored_jones_torus(-t.p, t.q, n).inverted();
            },
            [&](const mirror_node& m) { return jones_of_expression(m.child, n).inverted(); },
            [&](const sum_node& s) {
                return jones_of_expression(s.left, n) * jones_of_expression(s.right, n);
            },
            [&](const cable_node&) -> laurent_poly {
                throw oracle_error("oracle scope excludes cable expressions");
            },
        },
        k->node);
}

struct degree_pair {
    std::int64_t max_deg;
    std::int64_t min_deg;
};

inline degree_pair degrees_of_expression(const expr_ptr& k, std::int64_t n) {
    laurent_poly j = jones_of_expression(k, n);
    return {j.max_deg(), j.min_deg()};
}

// --- cross-validation ----------------------------------------------------------

struct degree_sample {
    std::int64_t n;
    std::int64_t max_deg;
    std::int64_t min_deg;
};

struct cross_validate_report {
    std::string expression;
    std::int64_t max_color = 0;
    std::vector<degree_sample> samples;
    std::optional<quasi_poly> fit_max;
    std::optional<quasi_poly> fit_min;
    quasi_poly engine_delta;
    quasi_poly engine_delta_star;
    std::vector<std::string> mismatches;
    bool ok = false;
};

namespace detail {

inline void compare_quasi(const std::string& label, const quasi_poly& fit, const quasi_poly& engine,
                          std::vector<std::string>& mismatches) {
    if (fit == engine) return;
    std::size_t pi = std::lcm(fit.period(), engine.period());
    const char* names[3] = {"c2", "c1", "c0"};
    for (std::size_t r = 0; r < pi; ++r) {
        rational f[3] = {fit.c2_at(std::int64_t(r)), fit.c1_at(std::int64_t(r)), fit.c0_at(std::int64_t(r))};
        rational e[3] = {engine.c2_at(std::int64_t(r)), engine.c1_at(std::int64_t(r)), engine.c0_at(std::int64_t(r))};
        for (int i = 0; i < 3; ++i)
            if (f[i] != e[i])
                mismatches.push_back(label + " " + names[i] + " at residue " + std::to_string(r) +
                                     ": oracle fit " + f[i].str() + ", engine " + e[i].str());
    }
}

} // namespace detail

// Sample oracle degrees for n = 1..max_color, fit quadratic quasi-polynomials
// of period 2 through them, and compare against the engine's (delta, delta*).
inline cross_validate_report cross_validate(const expr_ptr& k, std::int64_t max_color,
                                            const profile_options& opts = {}) {
    if (max_color < 6)
        throw std::invalid_argument("cross_validate: max_color must be at least 6 for a period-2 fit");
    if (contains_cable(k)) throw oracle_error("oracle scope excludes cable expressions");

    cross_validate_report rep;
    expr_ptr normal = normalize_mirrors(k);
    rep.expression = render(normal);
    rep.max_color = max_color;

    slope_profile prof = profile(k, opts);
    if (!prof.delta) throw oracle_error("engine has no exact quasi-polynomial for this expression");
    rep.engine_delta = prof.delta->first;
    rep.engine_delta_star = prof.delta->second;

    std::vector<std::pair<std::int64_t, rational>> max_samples, min_samples;
    for (std::int64_t n = 1; n <= max_color; ++n) {
        degree_pair d = degrees_of_expression(normal, n);
        rep.samples.push_back({n, d.max_deg, d.min_deg});
        max_samples.push_back({n, rational(d.max_deg)});
        min_samples.push_back({n, rational(d.min_deg)});
    }

    try {
        rep.fit_max = fit_from_samples(max_samples, 2);
        detail::compare_quasi("delta", *rep.fit_max, rep.engine_delta, rep.mismatches);
    } catch (const fit_error& e) {
        rep.mismatches.push_back(std::string("max-degree sequence is not a period-2 quadratic quasi-polynomial: ") + e.what());
    }
    try {
        rep.fit_min = fit_from_samples(min_samples, 2);
        detail::compare_quasi("delta*", *rep.fit_min, rep.engine_delta_star, rep.mismatches);
    } catch (const fit_error& e) {
        rep.mismatches.push_back(std::string("min-degree sequence is not a period-2 quadratic quasi-polynomial: ") + e.what());
    }

    rep.ok = rep.mismatches.empty();
    return rep;
}

} // namespace graphknot
