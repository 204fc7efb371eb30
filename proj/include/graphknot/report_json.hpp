// JSON serialization of engine objects and reports. Rationals are rendered as
// "a" or "a/b" strings (exact, never floating point); the meridional slope is
// the string "inf".
#pragma once

#include <nlohmann/json.hpp>

#include "graphknot/laurent_oracle.hpp"
#include "graphknot/quasi_poly.hpp"
#include "graphknot/slope_calculus.hpp"
#include "graphknot/slope_set.hpp"

namespace graphknot {

using json = nlohmann::json;

inline json to_json(const slope_set& s) {
    json arr = json::array();
    for (const auto& r : s.elements) arr.push_back(r.str());
    if (s.includes_meridian) arr.push_back("inf");
    return arr;
}

inline json to_json(const quasi_poly& f) {
    json c2 = json::array(), c1 = json::array(), c0 = json::array();
    for (const auto& c : f.c2()) c2.push_back(c.str());
    for (const auto& c : f.c1()) c1.push_back(c.str());
    for (const auto& c : f.c0()) c0.push_back(c.str());
    return json{{"period", f.period()}, {"c2", c2}, {"c1", c1}, {"c0", c0}};
}

// sparse [exponent, coefficient] pairs ordered by exponent
inline json to_json(const laurent_poly& f) {
    json arr = json::array();
    for (const auto& [e, c] : f.coeffs()) arr.push_back(json::array({e, c}));
    return arr;
}

inline json to_json(const condition_report& rep) {
    auto clause = [](const clause_result& c) {
        json j{{"ok", c.ok}};
        if (!c.ok) j["witness"] = c.witness;
        return j;
    };
    json j{{"period", clause(rep.period_clause)},
           {"linear", clause(rep.linear_clause)},
           {"integral", clause(rep.integral_clause)}};
    if (rep.trivial_pair) j["trivial_pair"] = true;
    return j;
}

inline json to_json(const hypothesis_check& chk) {
    return json{{"node", chk.node},
                {"cable_slope", chk.cable_slope.str()},
                {"companion_js", to_json(chk.companion_js)},
                {"ok", chk.ok()},
                {"condition_ok", chk.condition_ok},
                {"slopes_ok", chk.slopes_ok},
                {"mirror_side", chk.mirror_side}};
}

inline json profile_to_json(const std::string& expression, const slope_profile& prof) {
    json j;
    j["expression"] = expression;
    j["js_upper"] = to_json(prof.js_upper);
    j["js_star_upper"] = to_json(prof.js_star_upper);
    j["bs_gen"] = to_json(prof.bs_gen);
    if (prof.delta) {
        j["delta"] = to_json(prof.delta->first);
        j["delta_star"] = to_json(prof.delta->second);
    }
    json cond{{"status", to_string(prof.condition)}};
    if (prof.condition_clauses) cond["clauses"] = to_json(*prof.condition_clauses);
    j["condition_delta"] = cond;
    json checks = json::array();
    for (const auto& chk : prof.hypothesis_checks) checks.push_back(to_json(chk));
    j["hypothesis_checks"] = checks;
    j["verdict"] = to_string(prof.verdict);
    if (!prof.verdict_detail.empty()) j["verdict_detail"] = prof.verdict_detail;
    return j;
}

inline json to_json(const verification_report& rep) {
    json j = profile_to_json(rep.expression, rep.profile);
    json table = json::array();
    for (const auto& row : rep.membership) {
        json r{{"slope", row.slope.str()}};
        r["matched_bs"] = row.matched_bs ? json(row.matched_bs->str()) : json(nullptr);
        table.push_back(r);
    }
    j["membership_table"] = table;
    j["containment_ok"] = rep.containment_ok;
    return j;
}

inline json to_json(const cross_validate_report& rep) {
    json samples = json::array();
    for (const auto& s : rep.samples)
        samples.push_back(json{{"n", s.n}, {"max_deg", s.max_deg}, {"min_deg", s.min_deg}});
    json j{{"expression", rep.expression},
           {"max_color", rep.max_color},
           {"samples", samples},
           {"engine_delta", to_json(rep.engine_delta)},
           {"engine_delta_star", to_json(rep.engine_delta_star)},
           {"mismatches", rep.mismatches},
           {"ok", rep.ok}};
    if (rep.fit_max) j["fit_max"] = to_json(*rep.fit_max);
    if (rep.fit_min) j["fit_min"] = to_json(*rep.fit_min);
    return j;
}

} // namespace graphknot
