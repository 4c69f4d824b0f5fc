#pragma once

#include "common.hpp"

#include <array>
#include <compare>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fanolat {

// ch_{<=2} = (m0, m1 H, m2/den L); den is SearchOptions::ch2_denominator, normally 1.
struct TruncatedClass {
    long long m0 = 0, m1 = 0, m2 = 0;

    friend auto operator<=>(const TruncatedClass&, const TruncatedClass&) = default;
    TruncatedClass operator-(const TruncatedClass& o) const { return {m0 - o.m0, m1 - o.m1, m2 - o.m2}; }
    TruncatedClass operator-() const { return {-m0, -m1, -m2}; }
    std::string str() const {
        return "(" + std::to_string(m0) + "," + std::to_string(m1) + "," + std::to_string(m2) + ")";
    }
    ChernCharacter chern(long long den = 1) const { return {Rational(m0), Rational(m1), Rational(m2, den), 0}; }
};

// Truncation of a class whose H^2-part is an integer multiple of L/den.
inline TruncatedClass truncate(const ChernCharacter& x, long long den = 1) {
    Rational l = x.l * Rational(den);
    if (!x.r.is_integer() || !x.c.is_integer() || !l.is_integer())
        throw std::invalid_argument("class " + x.str() + " has non-integral truncation");
    return {to_ll(x.r.num()), to_ll(x.c.num()), to_ll(l.num())};
}

struct WallCandidate {
    std::pair<TruncatedClass, TruncatedClass> pair;
    Rational alpha_sq_wall;

    friend bool operator==(const WallCandidate& a, const WallCandidate& b) {
        return a.pair == b.pair && a.alpha_sq_wall == b.alpha_sq_wall;
    }
};

struct WallSearchResult {
    TruncatedClass target;
    Rational beta;
    bool strict = true;
    std::vector<WallCandidate> candidates;
    long long ordered_count = 0;  // solutions counted as (A, M - A)
    SearchMeta meta;
};

// Conditions (1)-(5) for the subobject A of M at beta; returns the wall alpha^2 if they hold.
// Written directly from the definitions; the search below only adds bounds in front of it.
inline std::optional<Rational> tilt_wall_condition(const ChernCharacter& M, const ChernCharacter& A,
                                                   const Rational& beta, const FanoContext& ctx, bool strict) {
    const Rational& d = ctx.degree;
    const ChernCharacter B = M - A;
    const Rational xm = ch1_beta(M, beta), xa = ch1_beta(A, beta), xb = ch1_beta(B, beta);
    if (strict) {
        if (!(xa.sign() > 0 && xb.sign() > 0)) return std::nullopt;
    } else {
        if (xa.sign() < 0 || xb.sign() < 0) return std::nullopt;
    }
    const Rational dm = discriminant(M, d), da = discriminant(A, d), db = discriminant(B, d);
    if (da.sign() < 0 || db.sign() < 0 || da > dm || db > dm) return std::nullopt;

    // re Z(A) im Z(M) = re Z(M) im Z(A) is linear in alpha^2
    const Rational ima = d * xa, imm = d * xm;
    const Rational k = d / 2 * (A.r * imm - M.r * ima);
    const Rational rhs = ch2_beta(A, beta, d) * imm - ch2_beta(M, beta, d) * ima;
    if (k.is_zero()) return std::nullopt;  // equal everywhere or nowhere: not a wall
    const Rational a2 = rhs / k;
    if (a2.sign() <= 0) return std::nullopt;

    const TiltPoint pt(a2, beta);
    const Slope sm = tilt_slope(M, pt, ctx);
    if (!(tilt_slope(A, pt, ctx) == sm && tilt_slope(B, pt, ctx) == sm)) return std::nullopt;
    return a2;
}

namespace detail {

// Integers c with lo_q <= q0 + k c <= hi_q, intersected into [lo, hi].
inline void clip_linear(const Rational& q0, const Rational& k, const Rational& lo_q, const Rational& hi_q,
                        std::optional<Rational>& lo, std::optional<Rational>& hi) {
    if (k.is_zero()) return;
    Rational a = (lo_q - q0) / k, b = (hi_q - q0) / k;
    if (k.sign() < 0) std::swap(a, b);
    if (!lo || a > *lo) lo = a;
    if (!hi || b < *hi) hi = b;
}

}  // namespace detail

inline WallSearchResult find_tilt_walls(const TruncatedClass& target, const Rational& beta, const FanoContext& ctx,
                                        const SearchOptions& opts = {}) {
    const long long den = opts.ch2_denominator;
    if (den <= 0) throw std::invalid_argument("ch2 denominator must be positive");
    const Rational& d = ctx.degree;
    const ChernCharacter M = target.chern(den);
    const Rational X = ch1_beta(M, beta);
    if (X.sign() < 0) throw std::invalid_argument("ch_1^beta of the target must be non-negative");

    WallSearchResult res;
    res.target = target;
    res.beta = beta;
    res.strict = opts.strict_ch1_bounds.value_or(X.sign() > 0);
    const bool strict = res.strict;

    const Rational delta_m = normalized_discriminant(M, d);
    const Rational nu_m = ch2_beta(M, beta, d) / d;
    if (delta_m.sign() < 0 || X.is_zero()) return res;  // no admissible A, or no finite slope for M

    // Rank bound: with x = ch_1^beta and nu = ch_2^beta / H^3, the discriminant conditions give
    // |2 a nu_A| <= C and |2 (m0 - a) nu_B| <= C with C = max(X^2, Delta_M); nu_A + nu_B = nu_M.
    long long a_lo, a_hi;
    if (!nu_m.is_zero()) {
        const Rational C = std::max(X * X, delta_m);
        const long long K = floor_ll(C / abs(nu_m));
        a_lo = std::min<long long>(0, target.m0) - K;
        a_hi = std::max<long long>(0, target.m0) + K;
    } else {
        res.meta.note_unbounded("ch_0", opts);
        a_lo = -opts.max_rank_cap;
        a_hi = opts.max_rank_cap;
    }

    struct Hit {
        TruncatedClass a;
        Rational a2;
    };
    std::vector<SearchMeta> metas;
    std::mutex meta_mu;

    auto hits = parallel_collect<Hit>(a_lo, a_hi, opts.threads, [&](long long a, std::vector<Hit>& out) {
        SearchMeta local;
        local.widen(0, a, a);
        // x = b - beta a in [0, X] (open when strict)
        const Rational ba = beta * Rational(a);
        long long b_lo = ceil_ll(ba), b_hi = floor_ll(ba + X);
        if (strict) {
            if (Rational(b_lo) == ba) ++b_lo;
            if (Rational(b_hi) == ba + X) --b_hi;
        }
        for (long long b = b_lo; b <= b_hi; ++b) {
            local.widen(1, b, b);
            if (a == 0 && target.m0 == 0) continue;  // both ranks zero: slopes never cross
            const Rational x = Rational(b) - ba;
            // normalized Delta(A) = x^2 - 2 a nu_A, nu_A = c/(den d) - beta b + beta^2 a / 2
            const Rational nu_a0 = -beta * Rational(b) + beta * beta * Rational(a) / 2;
            const Rational qa = x * x - 2 * Rational(a) * nu_a0;
            const Rational ka = Rational(-2 * a) / (d * Rational(den));
            const Rational xb = X - x;
            const Rational nu_b0 = nu_m - nu_a0;  // nu_B = nu_b0 - c/(den d)
            const Rational qb = xb * xb - 2 * Rational(target.m0 - a) * nu_b0;
            const Rational kb = Rational(2 * (target.m0 - a)) / (d * Rational(den));
            std::optional<Rational> lo, hi;
            detail::clip_linear(qa, ka, 0, delta_m, lo, hi);
            detail::clip_linear(qb, kb, 0, delta_m, lo, hi);
            if (!lo || !hi) {
                local.note_unbounded("ch_2", opts);
                lo = Rational(-opts.max_rank_cap * den * d.num().get_si());
                hi = Rational(opts.max_rank_cap * den * d.num().get_si());
            }
            const long long c_lo = ceil_ll(*lo), c_hi = floor_ll(*hi);
            local.widen(2, c_lo, c_hi);
            for (long long c = c_lo; c <= c_hi; ++c) {
                TruncatedClass A{a, b, c};
                if (auto a2 = tilt_wall_condition(M, A.chern(den), beta, ctx, strict)) out.push_back({A, *a2});
            }
        }
        std::lock_guard<std::mutex> g(meta_mu);
        metas.push_back(std::move(local));
    });
    for (auto& m : metas) res.meta.merge(m);

    res.ordered_count = static_cast<long long>(hits.size());
    for (auto& h : hits) {
        TruncatedClass B = target - h.a;
        auto p = h.a < B ? std::make_pair(h.a, B) : std::make_pair(B, h.a);
        res.candidates.push_back({p, h.a2});
    }
    std::sort(res.candidates.begin(), res.candidates.end(),
              [](const WallCandidate& x, const WallCandidate& y) { return x.pair < y.pair; });
    res.candidates.erase(std::unique(res.candidates.begin(), res.candidates.end(),
                                     [](const WallCandidate& x, const WallCandidate& y) { return x.pair == y.pair; }),
                         res.candidates.end());
    return res;
}

inline std::vector<WallCandidate> filter_by_li_bound(const std::vector<WallCandidate>& cands, const FanoContext& ctx,
                                                     long long den = 1) {
    std::vector<WallCandidate> out;
    for (auto& w : cands) {
        if (li_bound_check(w.pair.first.chern(den), ctx) == LiStatus::violated) continue;
        if (li_bound_check(w.pair.second.chern(den), ctx) == LiStatus::violated) continue;
        out.push_back(w);
    }
    return out;
}

}  // namespace fanolat
