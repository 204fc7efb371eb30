// Expression trees for knots built from unknots and torus knots by mirroring,
// connected sum and cabling, together with the text DSL:
//
//   expr := term ("#" term)*
//   term := "U" | "T(" int "," int ")" | "C(" int "," int ";" expr ")"
//         | "mirror(" expr ")" | "(" expr ")"
//   int  := "-"? digits            whitespace is insignificant
//
// "#" (connected sum) is left-associative. Trees are immutable and freely
// shared; every operation here is a pure function.
#pragma once

#include <cctype>
#include <cstdint>
#include <memory>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace graphknot {

struct knot_expr;
using expr_ptr = std::shared_ptr<const knot_expr>;

struct unknot_node {};
struct torus_node {
    std::int64_t p; // sign carries handedness
    std::int64_t q; // canonical form keeps q >= 2
};
struct mirror_node { expr_ptr child; };
struct sum_node { expr_ptr left, right; };
struct cable_node {
    std::int64_t p;
    std::int64_t q; // q > 1
    expr_ptr companion;
};

struct knot_expr {
    std::variant<unknot_node, torus_node, mirror_node, sum_node, cable_node> node;
};

inline expr_ptr unknot() { return std::make_shared<const knot_expr>(knot_expr{unknot_node{}}); }
inline expr_ptr torus(std::int64_t p, std::int64_t q) {
    return std::make_shared<const knot_expr>(knot_expr{torus_node{p, q}});
}
inline expr_ptr mirror(expr_ptr child) {
    return std::make_shared<const knot_expr>(knot_expr{mirror_node{std::move(child)}});
}
inline expr_ptr sum(expr_ptr left, expr_ptr right) {
    return std::make_shared<const knot_expr>(knot_expr{sum_node{std::move(left), std::move(right)}});
}
inline expr_ptr cable(std::int64_t p, std::int64_t q, expr_ptr companion) {
    return std::make_shared<const knot_expr>(knot_expr{cable_node{p, q, std::move(companion)}});
}

template <class... Fs> struct overloaded : Fs... { using Fs::operator()...; };
template <class... Fs> overloaded(Fs...) -> overloaded<Fs...>;

inline bool equal(const expr_ptr& a, const expr_ptr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->node.index() != b->node.index()) return false;
    return std::visit(
        overloaded{
            [](const unknot_node&) { return true; },
            [&](const torus_node& t) {
                const auto& o = std::get<torus_node>(b->node);
                return t.p == o.p && t.q == o.q;
            },
            [&](const mirror_node& m) { return equal(m.child, std::get<mirror_node>(b->node).child); },
            [&](const sum_node& s) {
                const auto& o = std::get<sum_node>(b->node);
                return equal(s.left, o.left) && equal(s.right, o.right);
            },
            [&](const cable_node& c) {
                const auto& o = std::get<cable_node>(b->node);
                return c.p == o.p && c.q == o.q && equal(c.companion, o.companion);
            },
        },
        a->node);
}

inline int depth(const expr_ptr& k) {
    return std::visit(overloaded{
                          [](const unknot_node&) { return 1; },
                          [](const torus_node&) { return 1; },
                          [](const mirror_node& m) { return 1 + depth(m.child); },
                          [](const sum_node& s) { return 1 + std::max(depth(s.left), depth(s.right)); },
                          [](const cable_node& c) { return 1 + depth(c.companion); },
                      },
                      k->node);
}

// True when the expression denotes the trivial knot: the unknot under any
// stack of mirrors. (Sums and cables over the unknot are validation errors,
// so deeper triviality never arises.)
inline bool is_trivial(const expr_ptr& k) {
    if (std::holds_alternative<unknot_node>(k->node)) return true;
    if (const auto* m = std::get_if<mirror_node>(&k->node)) return is_trivial(m->child);
    return false;
}

// --- rendering -------------------------------------------------------------

inline std::string render(const expr_ptr& k) {
    return std::visit(
        overloaded{
            [](const unknot_node&) -> std::string { return "U"; },
            [](const torus_node& t) {
                return "T(" + std::to_string(t.p) + "," + std::to_string(t.q) + ")";
            },
            [](const mirror_node& m) { return "mirror(" + render(m.child) + ")"; },
            [&](const sum_node& s) {
                std::string lhs = render(s.left);
                std::string rhs = render(s.right);
                // "#" is left-associative: a right child that is itself a sum
                // needs parentheses to round-trip
                if (std::holds_alternative<sum_node>(s.right->node)) rhs = "(" + rhs + ")";
                return lhs + " # " + rhs;
            },
            [](const cable_node& c) {
                return "C(" + std::to_string(c.p) + "," + std::to_string(c.q) + "; " +
                       render(c.companion) + ")";
            },
        },
        k->node);
}

// --- parsing ---------------------------------------------------------------

class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& what, std::size_t position)
        : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

namespace detail {

class parser {
public:
    explicit parser(std::string_view text) : text_(text) {}

    expr_ptr run() {
        expr_ptr e = parse_expr(0);
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input after expression");
        return e;
    }

private:
    static constexpr int max_nesting = 1000;

    expr_ptr parse_expr(int nest) {
        expr_ptr lhs = parse_term(nest);
        while (true) {
            skip_ws();
            if (!accept('#')) break;
            expr_ptr rhs = parse_term(nest);
            lhs = sum(std::move(lhs), std::move(rhs));
        }
        return lhs;
    }

    expr_ptr parse_term(int nest) {
        if (nest > max_nesting) fail("expression nested too deeply");
        skip_ws();
        if (pos_ >= text_.size()) fail("expected a term, found end of input");
        char c = text_[pos_];
        if (c == 'U') {
            ++pos_;
            return unknot();
        }
        if (c == 'T') {
            ++pos_;
            expect('(');
            std::int64_t p = parse_int();
            expect(',');
            std::int64_t q = parse_int();
            expect(')');
            return torus(p, q);
        }
        if (c == 'C') {
            ++pos_;
            expect('(');
            std::int64_t p = parse_int();
            expect(',');
            std::int64_t q = parse_int();
            expect(';');
            expr_ptr companion = parse_expr(nest + 1);
            expect(')');
            return cable(p, q, std::move(companion));
        }
        if (text_.compare(pos_, 6, "mirror") == 0) {
            pos_ += 6;
            expect('(');
            expr_ptr child = parse_expr(nest + 1);
            expect(')');
            return mirror(std::move(child));
        }
        if (c == '(') {
            ++pos_;
            expr_ptr e = parse_expr(nest + 1);
            expect(')');
            return e;
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::int64_t parse_int() {
        skip_ws();
        std::size_t start = pos_;
        bool negative = accept('-');
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected an integer");
        std::int64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            int digit = text_[pos_] - '0';
            if (__builtin_mul_overflow(value, std::int64_t(10), &value) ||
                __builtin_add_overflow(value, std::int64_t(digit), &value))
                throw parse_error("integer parameter overflows 64 bits", start);
            ++pos_;
        }
        return negative ? -value : value;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        skip_ws();
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    [[noreturn]] void fail(const std::string& what) { throw parse_error(what, pos_); }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline expr_ptr parse(std::string_view text) { return detail::parser(text).run(); }

// --- validation ------------------------------------------------------------

struct expr_limits {
    std::int64_t p_max = 1000000; // |p| bound for torus and cable parameters
    std::int64_t q_max = 10000;
    int max_depth = 64;
};

struct violation {
    std::string path; // "" is the root; children append .left/.right/.child/.companion
    std::string message;
};

namespace detail {

inline void validate_walk(const expr_ptr& k, const std::string& path, const expr_limits& limits,
                          int depth_here, std::vector<violation>& out) {
    if (depth_here > limits.max_depth) {
        out.push_back({path, "tree depth exceeds limit " + std::to_string(limits.max_depth)});
        return;
    }
    std::visit(
        overloaded{
            [](const unknot_node&) {},
            [&](const torus_node& t) {
                std::int64_t ap = t.p == INT64_MIN ? INT64_MAX : (t.p < 0 ? -t.p : t.p);
                if (ap < 2) out.push_back({path, "torus knot requires |p| >= 2, got p=" + std::to_string(t.p)});
                if (t.q < 2) out.push_back({path, "torus knot requires q >= 2, got q=" + std::to_string(t.q)});
                if (ap >= 2 && t.q >= 2 && std::gcd(ap, t.q) != 1)
                    out.push_back({path, "torus parameters must be coprime: gcd(" + std::to_string(ap) +
                                             "," + std::to_string(t.q) + ")=" +
                                             std::to_string(std::gcd(ap, t.q))});
                if (ap > limits.p_max)
                    out.push_back({path, "|p| exceeds limit " + std::to_string(limits.p_max)});
                if (t.q > limits.q_max)
                    out.push_back({path, "q exceeds limit " + std::to_string(limits.q_max)});
            },
            [&](const mirror_node& m) { validate_walk(m.child, path + ".child", limits, depth_here + 1, out); },
            [&](const sum_node& s) {
                if (is_trivial(s.left))
                    out.push_back({path, "connected sum with the unknot is the identity; drop the summand"});
                if (is_trivial(s.right))
                    out.push_back({path, "connected sum with the unknot is the identity; drop the summand"});
                validate_walk(s.left, path + ".left", limits, depth_here + 1, out);
                validate_walk(s.right, path + ".right", limits, depth_here + 1, out);
            },
            [&](const cable_node& c) {
                std::int64_t ap = c.p == INT64_MIN ? INT64_MAX : (c.p < 0 ? -c.p : c.p);
                if (c.q <= 1) out.push_back({path, "cable requires q > 1, got q=" + std::to_string(c.q)});
                if (c.q > 1 && std::gcd(ap, c.q) != 1)
                    out.push_back({path, "cable parameters must be coprime: gcd(" + std::to_string(ap) +
                                             "," + std::to_string(c.q) + ")=" +
                                             std::to_string(std::gcd(ap, c.q))});
                if (is_trivial(c.companion))
                    out.push_back({path, "cable companion must be a nontrivial knot"});
                if (ap > limits.p_max)
                    out.push_back({path, "|p| exceeds limit " + std::to_string(limits.p_max)});
                if (c.q > limits.q_max)
                    out.push_back({path, "q exceeds limit " + std::to_string(limits.q_max)});
                validate_walk(c.companion, path + ".companion", limits, depth_here + 1, out);
            },
        },
        k->node);
}

} // namespace detail

inline std::vector<violation> validate(const expr_ptr& k, const expr_limits& limits = {}) {
    std::vector<violation> out;
    detail::validate_walk(k, "", limits, 1, out);
    return out;
}

// --- mirror normalization ----------------------------------------------------
// Pushes every Mirror node down to the leaves and absorbs it into the sign of
// torus/cable parameters:
//   mirror(U) = U                    mirror(T(p,q))    = T(-p,q)
//   mirror(mirror(K)) = K            mirror(K1 # K2)   = mirror(K1) # mirror(K2)
//   mirror(C(p,q; K)) = C(-p,q; mirror(K))
// The result contains no Mirror nodes.

namespace detail {

inline expr_ptr normalize_plain(const expr_ptr& k);

inline expr_ptr normalize_mirrored(const expr_ptr& k) {
    return std::visit(
        overloaded{
            [&](const unknot_node&) { return unknot(); },
            [&](const torus_node& t) { return torus(-t.p, t.q); },
            [&](const mirror_node& m) { return normalize_plain(m.child); },
            [&](const sum_node& s) {
                return sum(normalize_mirrored(s.left), normalize_mirrored(s.right));
            },
            [&](const cable_node& c) { return cable(-c.p, c.q, normalize_mirrored(c.companion)); },
        },
        k->node);
}

inline expr_ptr normalize_plain(const expr_ptr& k) {
    return std::visit(
        overloaded{
            [&](const unknot_node&) { return k; },
            [&](const torus_node&) { return k; },
            [&](const mirror_node& m) { return normalize_mirrored(m.child); },
            [&](const sum_node& s) {
                expr_ptr l = normalize_plain(s.left);
                expr_ptr r = normalize_plain(s.right);
                if (l == s.left && r == s.right) return k;
                return sum(std::move(l), std::move(r));
            },
            [&](const cable_node& c) {
                expr_ptr comp = normalize_plain(c.companion);
                if (comp == c.companion) return k;
                return cable(c.p, c.q, std::move(comp));
            },
        },
        k->node);
}

} // namespace detail

inline expr_ptr normalize_mirrors(const expr_ptr& k) { return detail::normalize_plain(k); }

inline bool contains_mirror(const expr_ptr& k) {
    return std::visit(overloaded{
                          [](const unknot_node&) { return false; },
                          [](const torus_node&) { return false; },
                          [](const mirror_node&) { return true; },
                          [](const sum_node& s) { return contains_mirror(s.left) || contains_mirror(s.right); },
                          [](const cable_node& c) { return contains_mirror(c.companion); },
                      },
                      k->node);
}

inline bool contains_cable(const expr_ptr& k) {
    return std::visit(overloaded{
                          [](const unknot_node&) { return false; },
                          [](const torus_node&) { return false; },
                          [](const mirror_node& m) { return contains_cable(m.child); },
                          [](const sum_node& s) { return contains_cable(s.left) || contains_cable(s.right); },
                          [](const cable_node&) { return true; },
                      },
                      k->node);
}

} // namespace graphknot
