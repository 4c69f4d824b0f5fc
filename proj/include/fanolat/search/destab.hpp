#pragma once

#include "common.hpp"

#include <array>
#include <mutex>
#include <vector>

namespace fanolat {

// ext^1 budget for i^*O_x: 6 / 7 for ordinary / special genus 6, 25 for g = 7, 9 for g = 9, g otherwise.
inline long long default_ext1_bound(const FanoContext& ctx) {
    switch (ctx.genus) {
        case 6: return ctx.variant == Variant::special ? 7 : 6;
        case 7: return 25;
        case 9: return 9;
        default:
            if (ctx.genus >= 8 && ctx.even()) return ctx.genus;
            throw std::invalid_argument("no ext^1 bound for genus " + std::to_string(ctx.genus));
    }
}

// Class of i^*O_x[-1] in Kuznetsov coordinates.
inline KuClassCoords default_destab_target(const FanoContext& ctx) {
    auto k = skyscraper_coords(ctx);
    return {-k[0], -k[1], std::nullopt};
}

using DestabSolution = std::array<long long, 4>;

struct DestabResult {
    KuClassCoords target;
    TiltPoint pt;
    long long ext1_bound = 0;
    std::vector<DestabSolution> solutions;
    SearchMeta meta;
};

// Conditions (2)-(4) for [A] = a v + b w, [B] = target - [A]. Zero parts are not subobjects.
struct DestabCondition {
    FanoContext ctx;
    LatticeBasis basis;
    KuClassCoords target;
    TiltPoint pt;
    long long ext1_bound;

    DestabCondition(const FanoContext& c, const KuClassCoords& t, const TiltPoint& p, long long bound)
        : ctx(c), basis(ku_basis(c)), target(t), pt(p), ext1_bound(bound) {}

    bool operator()(long long a, long long b) const {
        const long long c = target.a - a, d = target.b - b;
        if ((a == 0 && b == 0) || (c == 0 && d == 0)) return false;
        const ChernCharacter A = basis.combo(a, b), B = basis.combo(c, d), T = basis.combo(target.a, target.b);
        const Rational imt = rotated_charge(T, pt, ctx).im;
        const Charge za = rotated_charge(A, pt, ctx), zb = rotated_charge(B, pt, ctx);
        if ((za.im * imt).sign() < 0 || (zb.im * imt).sign() < 0) return false;
        if (!slope_gt(slope_of(za), slope_of(zb))) return false;
        const Rational ext = (1 - chi(ctx, A, A)) + (1 - chi(ctx, B, B));
        return ext <= Rational(ext1_bound);
    }
};

namespace detail {

struct Coord2 {
    Rational a, b;
};

inline Rational form_q(const Matrix2& m, const Coord2& x) {
    return m[0][0] * x.a * x.a + (m[0][1] + m[1][0]) * x.a * x.b + m[1][1] * x.b * x.b;
}
inline Rational form_b(const Matrix2& m, const Coord2& x, const Coord2& y) {
    return m[0][0] * x.a * y.a + (m[0][1] + m[1][0]) / 2 * (x.a * y.b + x.b * y.a) + m[1][1] * x.b * y.b;
}

// max of p2 s^2 + p1 s + p0 over [s0, s1]
inline Rational quad_max(const Rational& p2, const Rational& p1, const Rational& p0, const Rational& s0,
                         const Rational& s1) {
    auto f = [&](const Rational& s) { return p2 * s * s + p1 * s + p0; };
    Rational best = std::max(f(s0), f(s1));
    if (p2.sign() < 0) {
        Rational v = -p1 / (2 * p2);
        if (v > s0 && v < s1) best = std::max(best, f(v));
    }
    return best;
}

}  // namespace detail

// Derives an integer box for (a, b): condition (2) confines im Z^0(A) to [0, im Z^0(T)], and on each
// line of constant im Z^0 the budget (4) is a quadratic in the free coordinate t.
inline std::array<Interval, 2> destab_box(const DestabCondition& cond, const SearchOptions& opts, SearchMeta& meta) {
    const auto& ctx = cond.ctx;
    const Matrix2& m = cond.basis.euler_matrix;
    const Rational i1 = rotated_charge(cond.basis.b1, cond.pt, ctx).im;
    const Rational i2 = rotated_charge(cond.basis.b2, cond.pt, ctx).im;
    const detail::Coord2 T{cond.target.a, cond.target.b};
    const Rational imt = i1 * T.a + i2 * T.b;
    const long long cap = opts.max_rank_cap;
    const std::array<Interval, 2> capped{Interval{-cap, cap}, Interval{-cap, cap}};

    if (imt.is_zero()) {
        meta.note_unbounded("im Z0 (target has im Z0 = 0, sign condition is vacuous)", opts);
        return capped;
    }
    detail::Coord2 e, u;
    if (!i1.is_zero()) {
        e = {1 / i1, 0};
        u = {-i2, i1};
    } else {
        e = {0, 1 / i2};
        u = {1, 0};
    }
    const Rational s0 = std::min(Rational(0), imt), s1 = std::max(Rational(0), imt);
    const Rational qu = detail::form_q(m, u);
    if (qu.sign() >= 0) {
        meta.note_unbounded("kernel of im Z0 (Euler form not negative there)", opts);
        return capped;
    }
    // f(s e + t u) = 2 q(u) t^2 + (4 s B(e,u) - 2 B(u,T)) t + (2 q(e) s^2 - 2 B(e,T) s + q(T)) >= 2 - bound
    const Rational A = -2 * qu;
    const Rational beu = detail::form_b(m, e, u), but = detail::form_b(m, u, T);
    auto lin = [&](const Rational& s) { return 4 * s * beu - 2 * but; };
    const Rational Bm = std::max(abs(lin(s0)), abs(lin(s1)));
    const Rational kappa = Rational(2 - cond.ext1_bound);
    const Rational G = std::max(Rational(0), detail::quad_max(2 * detail::form_q(m, e), -2 * detail::form_b(m, e, T),
                                                              detail::form_q(m, T) - kappa, s0, s1));
    const Rational tmax = Bm / A + Rational(ceil_sqrt((G / A).ceil()));

    auto range = [&](const Rational& ek, const Rational& uk) {
        Rational lo = std::min(s0 * ek, s1 * ek) - tmax * abs(uk);
        Rational hi = std::max(s0 * ek, s1 * ek) + tmax * abs(uk);
        return Interval{ceil_ll(lo), floor_ll(hi)};
    };
    return {range(e.a, u.a), range(e.b, u.b)};
}

inline DestabResult find_ku_destabilizers(const KuClassCoords& target, const FanoContext& ctx, const TiltPoint& pt,
                                          long long ext1_bound, const SearchOptions& opts = {}) {
    if (ctx.genus < 6) throw std::invalid_argument("destabilizer search needs genus >= 6");
    DestabResult res{target, pt, ext1_bound, {}, {}};
    const DestabCondition cond(ctx, target, pt, ext1_bound);
    auto box = destab_box(cond, opts, res.meta);
    res.meta.widen(0, box[0].lo, box[0].hi);
    res.meta.widen(1, box[1].lo, box[1].hi);
    res.solutions = parallel_collect<DestabSolution>(box[0].lo, box[0].hi, opts.threads,
                                                     [&](long long a, std::vector<DestabSolution>& out) {
                                                         for (long long b = box[1].lo; b <= box[1].hi; ++b)
                                                             if (cond(a, b))
                                                                 out.push_back({a, b, target.a - a, target.b - b});
                                                     });
    std::sort(res.solutions.begin(), res.solutions.end());
    return res;
}

}  // namespace fanolat
