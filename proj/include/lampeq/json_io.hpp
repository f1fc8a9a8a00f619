#pragma once

// JSON encodings:
//   LaurentPoly    {"ord": int, "bits": "1...1"}   bit k of "bits" = coeff of z^(ord+k)
//   GroupElement   {"delta": int, "f": <poly>}
//   ParametricPoly {"blocks": [{"i": int, "f": <poly>}, ...]}  ascending i
//   SolveOutcome   {"verdict": "yes|no|unknown", ...}

#include <json.hpp>

#include <algorithm>
#include <vector>

#include "lampeq/gf2poly.hpp"
#include "lampeq/lamplighter.hpp"
#include "lampeq/parametric.hpp"
#include "lampeq/solver.hpp"
#include "lampeq/tracer.hpp"

namespace lampeq {

inline nlohmann::json to_json(const LaurentPoly& f) {
    return {{"ord", f.is_zero() ? 0 : f.ord()}, {"bits", f.coeff_string()}};
}

inline LaurentPoly poly_from_json(const nlohmann::json& j) {
    return LaurentPoly::from_coeff_string(j.at("ord").get<std::int64_t>(),
                                          j.at("bits").get<std::string>());
}

inline nlohmann::json to_json(const GroupElement& g) {
    return {{"delta", g.delta}, {"f", to_json(g.lamps)}};
}

inline GroupElement element_from_json(const nlohmann::json& j) {
    return {j.at("delta").get<std::int64_t>(), poly_from_json(j.at("f"))};
}

inline nlohmann::json to_json(const ParametricPoly& p) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& [i, f] : p.blocks())
        blocks.push_back({{"i", i}, {"f", to_json(f)}});
    return {{"blocks", blocks}};
}

inline ParametricPoly parametric_from_json(const nlohmann::json& j) {
    ParametricPoly p;
    for (const auto& b : j.at("blocks"))
        p.set_block(b.at("i").get<std::int64_t>(), poly_from_json(b.at("f")));
    return p;
}

inline const char* verdict_name(Verdict v) {
    switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
    }
    return "unknown";
}

inline nlohmann::json to_json(const SolveOutcome& o) {
    nlohmann::json j{{"verdict", verdict_name(o.verdict)}};
    if (o.verdict == Verdict::Yes) {
        j["delta"] = *o.delta;
        j["f"] = to_json(*o.lamp);
        j["solution"] = format_word(*o.solution);
    }
    if (o.verdict == Verdict::Unknown) {
        j["theoretical_bound"] =
            o.theoretical_bound ? o.theoretical_bound->str() : "inf";
        j["budget"] = o.budget;
    }
    return j;
}

inline nlohmann::json to_json(const TraceResult& tr) {
    auto points = [](const GridPointSet& s) {
        std::vector<GridPoint> v(s.begin(), s.end());
        std::sort(v.begin(), v.end());
        nlohmann::json arr = nlohmann::json::array();
        for (const GridPoint& p : v) arr.push_back({p.x, p.t});
        return arr;
    };
    nlohmann::json path = nlohmann::json::array();
    for (const GridPoint& p : tr.path) path.push_back({p.x, p.t});
    return {{"x_w", tr.x_w},          {"t_w", tr.t_w},
            {"num", to_json(tr.num)}, {"den", to_json(tr.den)},
            {"N", points(tr.N)},      {"D", points(tr.D)},
            {"path", path}};
}

} // namespace lampeq
