#pragma once

#include "common.hpp"

#include <array>
#include <functional>
#include <mutex>
#include <string>
#include <vector>

namespace fanolat {

// coef . x + k >= 0
struct LinearConstraint {
    std::vector<Rational> coef;
    Rational k;
};

namespace fm {

inline LinearConstraint normalized(LinearConstraint c) {
    for (auto& a : c.coef)
        if (!a.is_zero()) {
            Rational s = abs(a);
            for (auto& x : c.coef) x /= s;
            c.k /= s;
            break;
        }
    return c;
}

inline bool same(const LinearConstraint& x, const LinearConstraint& y) { return x.coef == y.coef && x.k == y.k; }

// Projects the system onto the remaining variables by eliminating variable v.
inline std::vector<LinearConstraint> eliminate(const std::vector<LinearConstraint>& sys, std::size_t v) {
    std::vector<LinearConstraint> pos, neg, out;
    for (auto& c : sys) {
        int s = c.coef[v].sign();
        if (s > 0) pos.push_back(c);
        else if (s < 0) neg.push_back(c);
        else out.push_back(c);
    }
    for (auto& p : pos)
        for (auto& n : neg) {
            Rational wp = -n.coef[v], wn = p.coef[v];  // both positive
            LinearConstraint c{std::vector<Rational>(p.coef.size()), wp * p.k + wn * n.k};
            for (std::size_t i = 0; i < c.coef.size(); ++i) c.coef[i] = wp * p.coef[i] + wn * n.coef[i];
            c.coef[v] = 0;
            out.push_back(c);
        }
    std::vector<LinearConstraint> uniq;
    for (auto& c : out) {
        auto n = normalized(c);
        bool dup = false;
        for (auto& u : uniq)
            if (same(u, n)) { dup = true; break; }
        if (!dup) uniq.push_back(n);
    }
    return uniq;
}

struct Bounds {
    std::optional<Rational> lo, hi;
    bool infeasible = false;
};

// Bounds on variable v once the variables listed in `fixed` are substituted; every other
// coefficient must already be zero.
inline Bounds bounds_of(const std::vector<LinearConstraint>& sys, std::size_t v, const std::vector<long long>& fixed) {
    Bounds b;
    for (auto& c : sys) {
        Rational k = c.k;
        for (std::size_t i = 0; i < fixed.size(); ++i) k += c.coef[i] * Rational(fixed[i]);
        const Rational& a = c.coef[v];
        if (a.is_zero()) {
            if (k.sign() < 0) b.infeasible = true;
            continue;
        }
        Rational t = -k / a;
        if (a.sign() > 0) {
            if (!b.lo || t > *b.lo) b.lo = t;
        } else {
            if (!b.hi || t < *b.hi) b.hi = t;
        }
    }
    return b;
}

}  // namespace fm

enum class ConePreset { A8, A9 };

inline std::string to_string(ConePreset p) { return p == ConePreset::A8 ? "A8" : "A9"; }

// An exact predicate over (a, b, c) plus a linear relaxation of it used only to derive bounds.
struct ConeSystem {
    std::string name;
    FanoContext ctx;
    std::function<bool(long long, long long, long long)> holds;
    std::vector<LinearConstraint> relaxation;
    std::vector<std::string> variables{"a", "b", "c"};
};

// A class depending affinely on (a, b, c).
struct AffineClass {
    ChernCharacter base;
    std::array<ChernCharacter, 3> coef;

    ChernCharacter at(long long a, long long b, long long c) const {
        return base + Rational(a) * coef[0] + Rational(b) * coef[1] + Rational(c) * coef[2];
    }
    AffineClass operator-() const { return {-base, {-coef[0], -coef[1], -coef[2]}}; }
    friend AffineClass operator+(const AffineClass& x, const AffineClass& y) {
        return {x.base + y.base, {x.coef[0] + y.coef[0], x.coef[1] + y.coef[1], x.coef[2] + y.coef[2]}};
    }
    friend AffineClass operator-(const AffineClass& x, const AffineClass& y) { return x + (-y); }
    static AffineClass constant(const ChernCharacter& x) { return {x, {}}; }
};

namespace detail {

template <class F>
LinearConstraint affine_form(const AffineClass& x, F functional, const Rational& shift = 0) {
    LinearConstraint c{{functional(x.coef[0]), functional(x.coef[1]), functional(x.coef[2])}, functional(x.base) + shift};
    return c;
}

// Linearizes mu0(X) > mu0(Y) (gt) or mu0(X) < mu0(Y) for constant Y, assuming im Z0(X) > 0.
// Returns false when the comparison is unsatisfiable outright.
inline bool slope_vs_constant(const AffineClass& X, const ChernCharacter& Y, bool gt, const TiltPoint& pt,
                              const FanoContext& ctx, std::vector<LinearConstraint>& out) {
    const Charge zy = rotated_charge(Y, pt, ctx);
    if (zy.im.sign() <= 0) return !gt;  // mu0(Y) = +inf
    auto re = [&](const ChernCharacter& x) { return rotated_charge(x, pt, ctx).re; };
    auto im = [&](const ChernCharacter& x) { return rotated_charge(x, pt, ctx).im; };
    // gt: re(Y) im(X) - re(X) im(Y) > 0
    const Rational sgn = gt ? Rational(1) : Rational(-1);
    out.push_back(affine_form(X, [&](const ChernCharacter& x) { return sgn * (zy.re * im(x) - re(x) * zy.im); }));
    return true;
}

}  // namespace detail

// [B] = a v + b w + c [E] against the ideal-sheaf reference class C = I_x at (alpha_g^2, beta_g).
// A8 (g in 7, 8, 9, 10, 12): im Z0(A) >= 0, im Z0(B) > 0 with A = C - B; im Z0(K) > 0 and
// mu0(K) < mu0(E) with K = cE - B; mu0(C) > mu0(B) > mu0(E); c > 0; a < 0; b/a < mu(E)
// (b/(2a) < mu(E) for g = 7).
// A9 (g = 6): im Z0(A) >= 0, im Z0(B) > 0, im Z0(i^*A) >= 0 with i^*A = -[i^*O_x] - a v - b w;
// mu0(C) > mu0(B) >= mu0(E); c > 0; a < 0; b/a < mu(E).
inline ConeSystem cone_system(ConePreset preset, const FanoContext& ctx) {
    if (preset == ConePreset::A8 && !(ctx.genus >= 7 && ctx.genus != 11 && ctx.genus <= 12))
        throw std::invalid_argument("A8 is defined for genus 7, 8, 9, 10, 12");
    if (preset == ConePreset::A9 && ctx.genus != 6) throw std::invalid_argument("A9 is defined for genus 6");

    const LatticeBasis ku = ku_basis(ctx);
    const TiltPoint pt = standard_point(ctx);
    const ChernCharacter E = exceptional_bundle(ctx);
    const ChernCharacter C = named_class(ctx, "I_x");
    const ChernCharacter sky = named_class(ctx, "skyscraper_projection");
    const Rational muE = E.c / E.r;
    const int g = ctx.genus;

    const AffineClass Bx{ChernCharacter{}, {ku.b1, ku.b2, E}};
    const AffineClass Ax = AffineClass::constant(C) - Bx;
    const AffineClass Kx{ChernCharacter{}, {-ku.b1, -ku.b2, ChernCharacter{}}};
    const AffineClass iAx{-sky, {-ku.b1, -ku.b2, ChernCharacter{}}};

    ConeSystem sys;
    sys.name = to_string(preset);
    sys.ctx = ctx;

    auto im0 = [pt, ctx](const ChernCharacter& x) { return rotated_charge(x, pt, ctx).im; };
    auto mu0 = [pt, ctx](const ChernCharacter& x) { return rotated_slope(x, pt, ctx); };
    const Slope muE0 = mu0(E), muC0 = mu0(C);

    if (preset == ConePreset::A8) {
        sys.holds = [=](long long a, long long b, long long c) {
            if (!(c > 0 && a < 0)) return false;
            const Rational ratio = (g == 7) ? Rational(b, 2 * a) : Rational(b, a);
            if (!(ratio < muE)) return false;
            const ChernCharacter B = Bx.at(a, b, c), A = Ax.at(a, b, c), K = Kx.at(a, b, c);
            if (im0(A).sign() < 0 || im0(B).sign() <= 0 || im0(K).sign() <= 0) return false;
            if (!slope_lt(mu0(K), muE0)) return false;
            const Slope mb = mu0(B);
            return slope_gt(muC0, mb) && slope_gt(mb, muE0);
        };
    } else {
        sys.holds = [=](long long a, long long b, long long c) {
            if (!(c > 0 && a < 0)) return false;
            if (!(Rational(b, a) < muE)) return false;
            const ChernCharacter B = Bx.at(a, b, c), A = Ax.at(a, b, c), iA = iAx.at(a, b, c);
            if (im0(A).sign() < 0 || im0(B).sign() <= 0 || im0(iA).sign() < 0) return false;
            const Slope mb = mu0(B);
            return slope_gt(muC0, mb) && slope_cmp(mb, muE0) != Cmp::lt;
        };
    }

    // Linear relaxation (strict inequalities relaxed, integrality used for c > 0 and a < 0).
    auto& rel = sys.relaxation;
    rel.push_back(detail::affine_form(Ax, im0));
    rel.push_back(detail::affine_form(Bx, im0));
    rel.push_back({{0, 0, 1}, -1});   // c >= 1
    rel.push_back({{-1, 0, 0}, -1});  // a <= -1
    // b > mu(E) a (times 2 for g = 7), using a < 0
    rel.push_back({{-(g == 7 ? 2 : 1) * muE, 1, 0}, 0});
    bool feasible = true;
    feasible &= detail::slope_vs_constant(Bx, C, false, pt, ctx, rel);
    if (preset == ConePreset::A8) {
        rel.push_back(detail::affine_form(Kx, im0));
        feasible &= detail::slope_vs_constant(Kx, E, false, pt, ctx, rel);
        feasible &= detail::slope_vs_constant(Bx, E, true, pt, ctx, rel);
    } else {
        rel.push_back(detail::affine_form(iAx, im0));
        // mu0(B) >= mu0(E): same linear form as the strict version, relaxed
        feasible &= detail::slope_vs_constant(Bx, E, true, pt, ctx, rel);
    }
    if (!feasible) rel.push_back({{0, 0, 0}, -1});
    return sys;
}

struct ConeResult {
    std::string preset;
    int genus = 0;
    std::vector<Tuple> solutions;
    SearchMeta meta;
};

// Nested exact bounds a -> b -> c from the Fourier-Motzkin projections of the relaxation, then
// the exact predicate at every enumerated point.
inline ConeResult solve_cone_system(const ConeSystem& sys, const SearchOptions& opts = {}) {
    ConeResult res{sys.name, sys.ctx.genus, {}, {}};
    const auto& s3 = sys.relaxation;
    const auto s2 = fm::eliminate(s3, 2);
    const auto s1 = fm::eliminate(s2, 1);
    const long long cap = opts.max_rank_cap;

    auto to_interval = [&](const fm::Bounds& b, const std::string& var, SearchMeta& meta) {
        if (b.infeasible) return Interval{0, -1};
        Interval iv{-cap, cap};
        if (b.lo) iv.lo = ceil_ll(*b.lo);
        if (b.hi) iv.hi = floor_ll(*b.hi);
        if (!b.lo || !b.hi) meta.note_unbounded(var, opts);
        return iv;
    };

    const Interval ia = to_interval(fm::bounds_of(s1, 0, {}), "a", res.meta);
    res.meta.widen(0, ia.lo, ia.hi);
    std::vector<SearchMeta> metas;
    std::mutex mu;
    res.solutions = parallel_collect<Tuple>(ia.lo, ia.hi, opts.threads, [&](long long a, std::vector<Tuple>& out) {
        SearchMeta local;
        const Interval ib = to_interval(fm::bounds_of(s2, 1, {a}), "b", local);
        local.widen(1, ib.lo, ib.hi);
        for (long long b = ib.lo; b <= ib.hi; ++b) {
            const Interval ic = to_interval(fm::bounds_of(s3, 2, {a, b}), "c", local);
            local.widen(2, ic.lo, ic.hi);
            for (long long c = ic.lo; c <= ic.hi; ++c)
                if (sys.holds(a, b, c)) out.push_back({a, b, c});
        }
        std::lock_guard<std::mutex> g(mu);
        metas.push_back(std::move(local));
    });
    for (auto& m : metas) res.meta.merge(m);
    std::sort(res.solutions.begin(), res.solutions.end());
    return res;
}

inline ConeResult solve_cone_system(ConePreset preset, const FanoContext& ctx, const SearchOptions& opts = {}) {
    return solve_cone_system(cone_system(preset, ctx), opts);
}

}  // namespace fanolat
