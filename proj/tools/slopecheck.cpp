// slopecheck: exact verifier for the slope conjecture on knots built from
// unknots and torus knots by mirroring, connected sum and cabling.
//
// Subcommands:
//   analyze      slope profile of an expression
//   verify       conjecture verdict with a membership table
//   oracle-check colored-Jones degree cross-validation (cable-free input)
//   batch        seeded random expressions, aggregated verdicts
//   explain      derivation trace including the boundary-class arithmetic
//
// Exit codes: 0 success, 1 parse/validation/input error, 2 verification or
// oracle failure.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphknot/expr_gen.hpp"
#include "graphknot/knot_expr.hpp"
#include "graphknot/laurent_oracle.hpp"
#include "graphknot/report_json.hpp"
#include "graphknot/slope_calculus.hpp"
#include "graphknot/surface_homology.hpp"

namespace gk = graphknot;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input_error = 1;
constexpr int exit_verification_failure = 2;

struct run_config {
    std::string expression;
    std::string file;
    bool json = false;
    bool include_meridian = false;
    std::int64_t max_color = 8;
    std::uint64_t seed = 1;
    int count = 20;
    int depth = 4;
    std::vector<std::int64_t> bounds; // pmax, qmax
};

// Input files hold one expression per line; a line whose first non-blank
// character is '#' is a comment (the sum operator is only recognized between
// terms, so this is unambiguous).
std::vector<std::string> collect_expressions(const run_config& cfg) {
    std::vector<std::string> out;
    if (!cfg.file.empty()) {
        std::ifstream in(cfg.file);
        if (!in) throw std::runtime_error("cannot open input file: " + cfg.file);
        std::string line;
        while (std::getline(in, line)) {
            std::size_t first = line.find_first_not_of(" \t\r");
            if (first == std::string::npos || line[first] == '#') continue;
            out.push_back(line);
        }
    } else {
        out.push_back(cfg.expression);
    }
    return out;
}

gk::expr_ptr parse_and_validate(const std::string& text) {
    gk::expr_ptr k = gk::parse(text);
    auto violations = gk::validate(k);
    if (!violations.empty()) {
        std::ostringstream os;
        os << "invalid expression \"" << text << "\":";
        for (const auto& v : violations)
            os << "\n  at " << (v.path.empty() ? std::string("root") : v.path) << ": " << v.message;
        throw std::runtime_error(os.str());
    }
    return k;
}

void print_profile_text(std::ostream& os, const std::string& expression,
                        const gk::slope_profile& prof) {
    os << "expression:      " << expression << "\n";
    os << "js_upper:        " << prof.js_upper.str() << "\n";
    os << "js_star_upper:   " << prof.js_star_upper.str() << "\n";
    os << "bs_gen:          " << prof.bs_gen.str() << "\n";
    if (prof.delta) {
        os << "delta:           " << prof.delta->first.str() << "\n";
        os << "delta_star:      " << prof.delta->second.str() << "\n";
    }
    os << "condition_delta: " << gk::to_string(prof.condition) << "\n";
    for (const auto& chk : prof.hypothesis_checks)
        os << "hypothesis:      " << (chk.ok() ? "pass" : "FAIL") << "  " << chk.node
           << "  requires 4c2 != " << chk.cable_slope.str() << " on " << chk.companion_js.str()
           << (chk.mirror_side ? "  [mirror side]" : "") << "\n";
    os << "verdict:         " << gk::to_string(prof.verdict);
    if (!prof.verdict_detail.empty()) os << "  (" << prof.verdict_detail << ")";
    os << "\n";
}

int cmd_analyze(const run_config& cfg) {
    gk::profile_options opts;
    opts.include_meridian = cfg.include_meridian;
    int rc = exit_ok;
    gk::json out = gk::json::array();
    for (const auto& text : collect_expressions(cfg)) {
        gk::expr_ptr k = parse_and_validate(text);
        gk::slope_profile prof = gk::profile(k, opts);
        std::string rendered = gk::render(gk::normalize_mirrors(k));
        if (cfg.json)
            out.push_back(gk::profile_to_json(rendered, prof));
        else
            print_profile_text(std::cout, rendered, prof);
        if (prof.verdict != gk::verdict_kind::verified_superset_level) rc = exit_verification_failure;
    }
    if (cfg.json) std::cout << (out.size() == 1 ? out[0] : out).dump(2) << "\n";
    return rc;
}

int cmd_verify(const run_config& cfg) {
    gk::profile_options opts;
    opts.include_meridian = cfg.include_meridian;
    int rc = exit_ok;
    gk::json out = gk::json::array();
    for (const auto& text : collect_expressions(cfg)) {
        gk::expr_ptr k = parse_and_validate(text);
        gk::verification_report rep = gk::verify_conjecture(k, opts);
        if (cfg.json) {
            out.push_back(gk::to_json(rep));
        } else {
            print_profile_text(std::cout, rep.expression, rep.profile);
            std::cout << "membership:\n";
            for (const auto& row : rep.membership)
                std::cout << "  " << row.slope.str() << " -> "
                          << (row.matched_bs ? row.matched_bs->str() : std::string("NOT FOUND"))
                          << "\n";
        }
        if (rep.profile.verdict != gk::verdict_kind::verified_superset_level || !rep.containment_ok)
            rc = exit_verification_failure;
    }
    if (cfg.json) std::cout << (out.size() == 1 ? out[0] : out).dump(2) << "\n";
    return rc;
}

int cmd_oracle_check(const run_config& cfg) {
    gk::profile_options opts;
    opts.include_meridian = cfg.include_meridian;
    int rc = exit_ok;
    gk::json out = gk::json::array();
    for (const auto& text : collect_expressions(cfg)) {
        gk::expr_ptr k = parse_and_validate(text);
        if (gk::contains_cable(k))
            throw std::runtime_error("oracle-check requires a cable-free expression: " + text);
        gk::cross_validate_report rep = gk::cross_validate(k, cfg.max_color, opts);
        if (cfg.json) {
            gk::json j = gk::to_json(rep);
            gk::json polys = gk::json::array();
            gk::expr_ptr normal = gk::normalize_mirrors(k);
            for (std::int64_t n = 1; n <= cfg.max_color; ++n)
                polys.push_back(gk::json{
                    {"n", n}, {"terms", gk::to_json(gk::jones_of_expression(normal, n))}});
            j["polynomials"] = polys;
            out.push_back(j);
        } else {
            std::cout << "expression: " << rep.expression << "\n";
            for (const auto& s : rep.samples)
                std::cout << "  n=" << s.n << "  max_deg=" << s.max_deg << "  min_deg=" << s.min_deg
                          << "\n";
            std::cout << "engine delta:      " << rep.engine_delta.str() << "\n";
            std::cout << "engine delta_star: " << rep.engine_delta_star.str() << "\n";
            if (rep.ok) {
                std::cout << "oracle degrees match the engine quasi-polynomials exactly\n";
            } else {
                for (const auto& m : rep.mismatches) std::cout << "MISMATCH: " << m << "\n";
            }
        }
        if (!rep.ok) rc = exit_verification_failure;
    }
    if (cfg.json) std::cout << (out.size() == 1 ? out[0] : out).dump(2) << "\n";
    return rc;
}

int cmd_batch(const run_config& cfg) {
    gk::gen_options gen;
    gen.max_depth = cfg.depth;
    if (cfg.bounds.size() == 2) {
        gen.p_max = cfg.bounds[0];
        gen.q_max = cfg.bounds[1];
    }
    gk::profile_options opts;
    opts.include_meridian = cfg.include_meridian;

    // expressions are drawn up front so the sequence depends only on the seed
    std::mt19937_64 rng(cfg.seed);
    std::vector<gk::expr_ptr> exprs;
    for (int i = 0; i < cfg.count; ++i) exprs.push_back(gk::random_expr(rng, gen));

    int verified = 0, hypothesis_failures = 0, containment_failures = 0;
    gk::json results = gk::json::array();
    for (int i = 0; i < cfg.count; ++i) {
        gk::verification_report rep = gk::verify_conjecture(exprs[i], opts);
        const char* verdict = gk::to_string(rep.profile.verdict);
        if (rep.profile.verdict == gk::verdict_kind::verified_superset_level)
            ++verified;
        else if (rep.profile.verdict == gk::verdict_kind::hypothesis_failure)
            ++hypothesis_failures;
        if (!rep.containment_ok) ++containment_failures;
        if (cfg.json)
            results.push_back(gk::json{{"index", i},
                                       {"expression", rep.expression},
                                       {"verdict", verdict},
                                       {"containment_ok", rep.containment_ok}});
        else
            std::cout << i << "  " << verdict << "  " << rep.expression << "\n";
    }
    if (cfg.json) {
        gk::json summary{{"seed", cfg.seed},
                         {"count", cfg.count},
                         {"verified", verified},
                         {"hypothesis_failures", hypothesis_failures},
                         {"containment_failures", containment_failures}};
        std::cout << gk::json{{"summary", summary}, {"results", results}}.dump(2) << "\n";
    } else {
        std::cout << "verified " << verified << "/" << cfg.count << ", hypothesis failures "
                  << hypothesis_failures << ", containment failures " << containment_failures
                  << "\n";
    }
    return verified == cfg.count ? exit_ok : exit_verification_failure;
}

void explain_walk(const gk::expr_ptr& k, int indent, const gk::profile_options& opts,
                  std::vector<std::string>& out) {
    auto line = [&](const std::string& s) { out.push_back(std::string(2 * indent, ' ') + s); };
    std::visit(
        gk::overloaded{
            [&](const gk::unknot_node&) { line("U: js = js* = bs = {0} (Seifert disk)"); },
            [&](const gk::torus_node& t) {
                gk::rational pq = gk::rational(t.p) * gk::rational(t.q);
                line("torus leaf " + gk::render(k) + ": Seifert slope 0, cabling annulus slope " +
                     pq.str() + "; js = {" + (t.p > 0 ? pq.str() : "0") + "}, js* = {" +
                     (t.p > 0 ? "0" : pq.str()) + "}");
            },
            [&](const gk::mirror_node&) {},
            [&](const gk::sum_node& s) {
                gk::slope_profile pl = gk::profile(s.left, opts);
                gk::slope_profile pr = gk::profile(s.right, opts);
                line("connected sum " + gk::render(k) + ":");
                line("  glued boundary classes over bs " + pl.bs_gen.str() + " x " +
                     pr.bs_gen.str() + " (one surface copy each):");
                for (const auto& a : pl.bs_gen.elements)
                    for (const auto& b : pr.bs_gen.elements) {
                        gk::glued_boundary g = gk::glued_boundary_class(1, a.num(), a.den(), 1,
                                                                        b.num(), b.den());
                        line("    " + a.str() + " (+) " + b.str() + ": total " + g.total.str() +
                             ", " + std::to_string(g.component_count) + " component(s) of slope " +
                             g.component_slope.str());
                    }
                explain_walk(s.left, indent + 1, opts, out);
                explain_walk(s.right, indent + 1, opts, out);
            },
            [&](const gk::cable_node& c) {
                gk::slope_profile pc = gk::profile(c.companion, opts);
                line("cable " + gk::render(k) + ":");
                line("  cabling annulus slope pq = " +
                     (gk::rational(c.p) * gk::rational(c.q)).str());
                for (const auto& a : pc.bs_gen.elements) {
                    gk::cable_boundary cb =
                        gk::cable_boundary_slopes(a.num(), a.den(), c.p, c.q);
                    line("  companion slope " + a.str() + ": class " + cb.surface_class.str() +
                         " meets outer torus in " + cb.outer_class.str() + " (slope " +
                         cb.outer.str() + "), inner torus in " + cb.inner_class.str() +
                         " (slope " + cb.inner.str() + ")");
                }
                explain_walk(c.companion, indent + 1, opts, out);
            },
        },
        k->node);
}

int cmd_explain(const run_config& cfg) {
    gk::profile_options opts;
    opts.include_meridian = cfg.include_meridian;
    int rc = exit_ok;
    gk::json out = gk::json::array();
    for (const auto& text : collect_expressions(cfg)) {
        gk::expr_ptr k = gk::normalize_mirrors(parse_and_validate(text));
        std::vector<std::string> lines;
        explain_walk(k, 0, opts, lines);
        gk::slope_profile prof = gk::profile(k, opts);
        if (cfg.json) {
            gk::json j = gk::profile_to_json(gk::render(k), prof);
            j["trace"] = lines;
            out.push_back(j);
        } else {
            for (const auto& l : lines) std::cout << l << "\n";
            print_profile_text(std::cout, gk::render(k), prof);
        }
        if (prof.verdict != gk::verdict_kind::verified_superset_level) rc = exit_verification_failure;
    }
    if (cfg.json) std::cout << (out.size() == 1 ? out[0] : out).dump(2) << "\n";
    return rc;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact slope-conjecture verifier for graph-knot expressions"};
    app.require_subcommand(1);

    run_config cfg;

    auto add_expr_options = [&](CLI::App* sub) {
        sub->add_option("expression", cfg.expression, "knot expression, e.g. \"C(13,2; T(2,3))\"");
        sub->add_option("--file", cfg.file, "input file, one expression per line, '#' comments");
        sub->add_flag("--json", cfg.json, "emit JSON instead of text");
        sub->add_flag("--include-meridian", cfg.include_meridian,
                      "add the meridional slope to bs of composite knots");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "slope profile of an expression");
    add_expr_options(analyze);
    CLI::App* verify = app.add_subcommand("verify", "conjecture verdict with membership table");
    add_expr_options(verify);
    CLI::App* oracle = app.add_subcommand("oracle-check", "cross-validate degrees against the oracle");
    add_expr_options(oracle);
    oracle->add_option("--max-color", cfg.max_color, "sample colors n = 1..N (N >= 6)")
        ->check(CLI::Range(std::int64_t(6), std::int64_t(64)));
    CLI::App* explain = app.add_subcommand("explain", "derivation trace with homology arithmetic");
    add_expr_options(explain);
    CLI::App* batch = app.add_subcommand("batch", "seeded random expressions, aggregated verdicts");
    batch->add_flag("--json", cfg.json, "emit JSON instead of text");
    batch->add_flag("--include-meridian", cfg.include_meridian,
                    "add the meridional slope to bs of composite knots");
    batch->add_option("--seed", cfg.seed, "PRNG seed; output is bit-identical per seed");
    batch->add_option("--count", cfg.count, "number of expressions")->check(CLI::PositiveNumber);
    batch->add_option("--depth", cfg.depth, "maximum tree depth")->check(CLI::PositiveNumber);
    batch->add_option("--bounds", cfg.bounds, "pmax,qmax parameter bounds")->delimiter(',')->expected(2);

    CLI11_PARSE(app, argc, argv);

    try {
        for (CLI::App* sub : {analyze, verify, oracle, explain}) {
            if (sub->parsed() && cfg.expression.empty() && cfg.file.empty()) {
                std::cerr << "error: provide an expression or --file\n";
                return exit_input_error;
            }
        }
        if (analyze->parsed()) return cmd_analyze(cfg);
        if (verify->parsed()) return cmd_verify(cfg);
        if (oracle->parsed()) return cmd_oracle_check(cfg);
        if (batch->parsed()) return cmd_batch(cfg);
        if (explain->parsed()) return cmd_explain(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    return exit_input_error;
}
