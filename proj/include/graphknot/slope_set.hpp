// Finite sets of slopes: reduced rationals plus an optional meridional slope
// (infinity), which is carried as a flag rather than a sentinel value.
#pragma once

#include <set>
#include <sstream>
#include <string>

#include "graphknot/rational.hpp"

namespace graphknot {

struct slope_set {
    std::set<rational> elements;
    bool includes_meridian = false;

    slope_set() = default;
    slope_set(std::initializer_list<rational> xs) : elements(xs) {}

    void insert(const rational& r) { elements.insert(r); }
    bool contains(const rational& r) const { return elements.count(r) != 0; }
    std::size_t size() const { return elements.size() + (includes_meridian ? 1 : 0); }
    bool empty() const { return elements.empty() && !includes_meridian; }

    // finite elements only; the meridian has no negative
    slope_set negated() const {
        slope_set out;
        out.includes_meridian = includes_meridian;
        for (const auto& r : elements) out.insert(-r);
        return out;
    }

    bool subset_of(const slope_set& other) const {
        if (includes_meridian && !other.includes_meridian) return false;
        for (const auto& r : elements)
            if (!other.contains(r)) return false;
        return true;
    }

    friend bool operator==(const slope_set& a, const slope_set& b) {
        return a.elements == b.elements && a.includes_meridian == b.includes_meridian;
    }

    std::string str() const {
        std::ostringstream os;
        os << '{';
        bool first = true;
        for (const auto& r : elements) {
            if (!first) os << ", ";
            os << r.str();
            first = false;
        }
        if (includes_meridian) {
            if (!first) os << ", ";
            os << "inf";
        }
        os << '}';
        return os.str();
    }
};

} // namespace graphknot
