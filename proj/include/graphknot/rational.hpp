// Exact rational numbers over checked 64-bit integers. Values are always kept
// in lowest terms with a positive denominator, so equality is bitwise and a
// rational can be used directly as a set element or map key.
#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include "graphknot/checked.hpp"

namespace graphknot {

class rational {
public:
    rational() : num_(0), den_(1) {}
    rational(std::int64_t n) : num_(n), den_(1) {}
    rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return (num_ > 0) - (num_ < 0); }

    rational operator-() const { return rational(checked_neg(num_), den_); }

    friend rational operator+(const rational& a, const rational& b) {
        __int128 n = __int128(a.num_) * b.den_ + __int128(b.num_) * a.den_;
        __int128 d = __int128(a.den_) * b.den_;
        return from_wide(n, d);
    }
    friend rational operator-(const rational& a, const rational& b) { return a + (-b); }

    friend rational operator*(const rational& a, const rational& b) {
        __int128 n = __int128(a.num_) * b.num_;
        __int128 d = __int128(a.den_) * b.den_;
        return from_wide(n, d);
    }

    friend rational operator/(const rational& a, const rational& b) {
        if (b.num_ == 0) throw std::domain_error("rational division by zero");
        __int128 n = __int128(a.num_) * b.den_;
        __int128 d = __int128(a.den_) * b.num_;
        return from_wide(n, d);
    }

    rational& operator+=(const rational& o) { return *this = *this + o; }
    rational& operator-=(const rational& o) { return *this = *this - o; }
    rational& operator*=(const rational& o) { return *this = *this * o; }
    rational& operator/=(const rational& o) { return *this = *this / o; }

    friend bool operator==(const rational& a, const rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const rational& a, const rational& b) {
        return __int128(a.num_) * b.den_ <=> __int128(b.num_) * a.den_;
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    friend std::ostream& operator<<(std::ostream& os, const rational& r) { return os << r.str(); }

private:
    static rational from_wide(__int128 n, __int128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 a = n < 0 ? -n : n;
        __int128 g = 1;
        // gcd on the 128-bit intermediates before narrowing
        { __int128 x = a, y = d; while (y != 0) { __int128 t = x % y; x = y; y = t; } g = x == 0 ? 1 : x; }
        rational r;
        r.num_ = checked_narrow(n / g);
        r.den_ = checked_narrow(d / g);
        return r;
    }

    void normalize() {
        if (den_ == 0) throw std::domain_error("rational with zero denominator");
        if (den_ < 0) { num_ = checked_neg(num_); den_ = checked_neg(den_); }
        std::uint64_t a = num_ < 0 ? std::uint64_t(0) - std::uint64_t(num_) : std::uint64_t(num_);
        std::uint64_t g = std::gcd(a, std::uint64_t(den_));
        if (g > 1) { num_ /= std::int64_t(g); den_ /= std::int64_t(g); }
    }

    std::int64_t num_;
    std::int64_t den_;
};

} // namespace graphknot
