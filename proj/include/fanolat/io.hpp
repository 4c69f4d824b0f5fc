#pragma once

#include "search/cone.hpp"
#include "search/destab.hpp"
#include "search/walls.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace fanolat {

using json = nlohmann::json;

inline json to_json(const Rational& q) { return q.str(); }

inline json to_json(const ChernCharacter& x) { return json::array({x.r.str(), x.c.str(), x.l.str(), x.p.str()}); }

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (!j.is_string()) throw std::invalid_argument("expected a rational string");
    return Rational::parse(j.get<std::string>());
}

inline ChernCharacter chern_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) throw std::invalid_argument("expected an array of four rationals");
    return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]), rational_from_json(j[3])};
}

inline json to_json(const Slope& s) { return s.str(); }

inline json to_json(const TruncatedClass& t) { return json::array({t.m0, t.m1, t.m2}); }

inline json to_json(const Matrix2& m) {
    return json::array({json::array({m[0][0].str(), m[0][1].str()}), json::array({m[1][0].str(), m[1][1].str()})});
}

inline json to_json(const LatticeBasis& b) {
    return {{"kind", b.kind == BasisKind::ku ? "ku" : "alternative"},
            {"b1", to_json(b.b1)},
            {"b2", to_json(b.b2)},
            {"euler_matrix", to_json(b.euler_matrix)}};
}

inline json meta_json(const SearchMeta& m) {
    json box = json::array();
    for (auto& iv : m.box) box.push_back(json::array({iv.lo, iv.hi}));
    return {{"complete", m.complete}, {"warnings", m.warnings}, {"search_box", box}};
}

inline json to_json(const WallSearchResult& r, const SearchOptions& opts, bool li_filtered) {
    json sols = json::array();
    for (auto& w : r.candidates)
        sols.push_back({{"pair", json::array({to_json(w.pair.first), to_json(w.pair.second)})},
                        {"alpha_sq_wall", w.alpha_sq_wall.str()}});
    json j{{"target", to_json(r.target)},
           {"beta", r.beta.str()},
           {"options",
            {{"strict_ch1_bounds", r.strict},
             {"max_rank_cap", opts.max_rank_cap},
             {"require_bounded", opts.require_bounded},
             {"ch2_denominator", opts.ch2_denominator},
             {"li_filter", li_filtered}}},
           {"solutions", sols},
           {"ordered_count", r.ordered_count}};
    j.update(meta_json(r.meta));
    return j;
}

inline json to_json(const DestabResult& r, const SearchOptions& opts) {
    json sols = json::array();
    for (auto& s : r.solutions) sols.push_back(json::array({s[0], s[1], s[2], s[3]}));
    json j{{"target", json::array({r.target.a, r.target.b})},
           {"beta", r.pt.beta.str()},
           {"alpha_sq", r.pt.alpha_sq.str()},
           {"options", {{"ext1_bound", r.ext1_bound}, {"max_rank_cap", opts.max_rank_cap}, {"require_bounded", opts.require_bounded}}},
           {"solutions", sols}};
    j.update(meta_json(r.meta));
    return j;
}

inline json tuples_json(const std::vector<Tuple>& ts) {
    json sols = json::array();
    for (auto& t : ts) sols.push_back(t);
    return sols;
}

inline json to_json(const ConeResult& r, const FanoContext& ctx, const SearchOptions& opts) {
    const TiltPoint pt = standard_point(ctx);
    json j{{"target", r.preset},
           {"genus", r.genus},
           {"beta", pt.beta.str()},
           {"alpha_sq", pt.alpha_sq.str()},
           {"options", {{"max_rank_cap", opts.max_rank_cap}, {"require_bounded", opts.require_bounded}}},
           {"solutions", tuples_json(r.solutions)}};
    j.update(meta_json(r.meta));
    return j;
}

}  // namespace fanolat
