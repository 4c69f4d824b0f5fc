#pragma once

#include "threefold.hpp"

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace fanolat {

// Tilt parameter, stored as alpha^2 so that irrational alpha stays exact.
struct TiltPoint {
    Rational alpha_sq;
    Rational beta;

    TiltPoint() : alpha_sq(1), beta(0) {}
    TiltPoint(Rational a2, Rational b) : alpha_sq(std::move(a2)), beta(std::move(b)) {
        if (alpha_sq.sign() <= 0) throw std::invalid_argument("alpha^2 must be positive");
    }
};

struct Charge {
    Rational re, im;
    friend bool operator==(const Charge&, const Charge&) = default;
};

struct Slope {
    bool infinite = true;
    Rational value;

    static Slope inf() { return {}; }
    static Slope finite(Rational v) { return {false, std::move(v)}; }
    std::string str() const { return infinite ? "+inf" : value.str(); }
    friend bool operator==(const Slope& a, const Slope& b) {
        return a.infinite == b.infinite && (a.infinite || a.value == b.value);
    }
};

enum class Cmp { lt, eq, gt };

inline Cmp slope_cmp(const Slope& a, const Slope& b) {
    if (a.infinite) return b.infinite ? Cmp::eq : Cmp::gt;
    if (b.infinite) return Cmp::lt;
    if (a.value < b.value) return Cmp::lt;
    return a.value == b.value ? Cmp::eq : Cmp::gt;
}
inline bool slope_lt(const Slope& a, const Slope& b) { return slope_cmp(a, b) == Cmp::lt; }
inline bool slope_gt(const Slope& a, const Slope& b) { return slope_cmp(a, b) == Cmp::gt; }

// H . ch_2^beta in units of P.
inline Rational ch2_beta(const ChernCharacter& x, const Rational& beta, const Rational& d) {
    return x.l - beta * x.c * d + beta * beta * d * x.r / 2;
}

inline Rational ch1_beta(const ChernCharacter& x, const Rational& beta) { return x.c - beta * x.r; }

inline Charge charge(const ChernCharacter& x, const TiltPoint& pt, const FanoContext& ctx) {
    const Rational& d = ctx.degree;
    return {pt.alpha_sq / 2 * d * x.r - ch2_beta(x, pt.beta, d), d * ch1_beta(x, pt.beta)};
}

// Z divided by i.
inline Charge rotated_charge(const ChernCharacter& x, const TiltPoint& pt, const FanoContext& ctx) {
    const Rational& d = ctx.degree;
    return {d * ch1_beta(x, pt.beta), ch2_beta(x, pt.beta, d) - pt.alpha_sq / 2 * d * x.r};
}

inline Slope slope_of(const Charge& z) {
    if (z.im.sign() > 0) return Slope::finite(-z.re / z.im);
    return Slope::inf();
}

inline Slope tilt_slope(const ChernCharacter& x, const TiltPoint& pt, const FanoContext& ctx) {
    return slope_of(charge(x, pt, ctx));
}
inline Slope rotated_slope(const ChernCharacter& x, const TiltPoint& pt, const FanoContext& ctx) {
    return slope_of(rotated_charge(x, pt, ctx));
}

inline Slope classical_mu(const ChernCharacter& x) {
    if (x.r.is_zero()) return Slope::inf();
    return Slope::finite(x.c / x.r);
}

inline Rational discriminant(const ChernCharacter& x, const Rational& d) {
    return (x.c * d) * (x.c * d) - 2 * d * x.r * x.l;
}
inline Rational normalized_discriminant(const ChernCharacter& x, const Rational& d) {
    return x.c * x.c - 2 * x.r * x.l / d;
}

enum class LiStatus { consistent, violated, inapplicable };

inline std::string to_string(LiStatus s) {
    switch (s) {
        case LiStatus::consistent: return "consistent";
        case LiStatus::violated: return "violated";
        default: return "inapplicable";
    }
}

// Piecewise upper bounds on H ch_2 / (H^3 ch_0) in terms of |mu|, available for genus 7 and 9.
// The genus 7 breakpoints involve 1/(2 sqrt 2); they are compared through squares.
inline LiStatus li_bound_check(const ChernCharacter& x, const FanoContext& ctx) {
    if (x.r.is_zero()) return LiStatus::inapplicable;
    const Rational mu = x.c / x.r;
    const Rational y = x.l / (ctx.degree * x.r);
    auto verdict = [&](const Rational& bound) { return y <= bound ? LiStatus::consistent : LiStatus::violated; };

    if (ctx.genus == 9) {
        if (mu == Rational(-1, 2)) return verdict(Rational(5, 64));
        return LiStatus::inapplicable;
    }
    if (ctx.genus != 7) return LiStatus::inapplicable;

    const Rational m = abs(mu);
    // |m - k| versus s = 1/(2 sqrt 2); equality cannot occur for rational m
    auto near = [&](int k) { Rational t = m - k; return t * t < Rational(1, 8); };
    const Rational quad = m * m / 2 - Rational(1, 16);
    if (near(0)) return verdict(0);
    if (m < 1 && !near(1)) return verdict(quad);
    if (near(1)) return verdict(m - Rational(1, 2));
    if (m < 2 && !near(2)) return verdict(quad);
    return LiStatus::inapplicable;
}

// E(-H)[1] < O(-H)[1] < 0 < E < O for tilt slopes at pt.
inline bool heart_window_check(const FanoContext& ctx, const TiltPoint& pt) {
    if (ctx.genus < 6) throw std::invalid_argument("heart window check needs genus >= 6; use region_W_check");
    const ChernCharacter E = exceptional_bundle(ctx);
    const ChernCharacter O{1, 0, 0, 0};
    auto mu = [&](const ChernCharacter& x) { return tilt_slope(x, pt, ctx); };
    const Slope e_sh = mu(shift(twist_line(E, -1, ctx.degree), 1));
    const Slope o_sh = mu(shift(twist_line(O, -1, ctx.degree), 1));
    const Slope zero = Slope::finite(0);
    return slope_lt(e_sh, o_sh) && slope_lt(o_sh, zero) && slope_lt(zero, mu(E)) && slope_lt(mu(E), mu(O));
}

inline bool region_W_check(const Rational& alpha_sq, const Rational& beta) {
    if (alpha_sq.sign() <= 0) return false;
    if (beta >= Rational(-1, 2) && beta.sign() < 0) return alpha_sq < beta * beta;
    if (beta > Rational(-1) && beta < Rational(-1, 2)) {
        Rational t = 1 + beta;
        return alpha_sq <= t * t;
    }
    return false;
}

struct WallCircle {
    Rational center, radius_sq;
};
struct WallLine {
    Rational beta;
};
struct WallEverywhere {};
struct WallNowhere {};
using WallLocus = std::variant<WallCircle, WallLine, WallEverywhere, WallNowhere>;

// Solutions of re Z(a) im Z(m) = re Z(m) im Z(a) with alpha^2 > 0:
// (alpha^2 + beta^2) D / 2 + (l_m c_a - l_a c_m) + beta (l_a r_m - l_m r_a) = 0, l in units of H^3.
inline WallLocus wall_locus(const ChernCharacter& a, const ChernCharacter& m, const FanoContext& ctx) {
    const Rational& d = ctx.degree;
    const Rational la = a.l / d, lm = m.l / d;
    const Rational D = a.r * m.c - m.r * a.c;
    const Rational k0 = lm * a.c - la * m.c;
    const Rational k1 = la * m.r - lm * a.r;
    if (!D.is_zero()) {
        Rational center = (lm * a.r - la * m.r) / D;
        Rational rsq = center * center - 2 * k0 / D;
        if (rsq.sign() <= 0) return WallNowhere{};
        return WallCircle{center, rsq};
    }
    if (!k1.is_zero()) return WallLine{-k0 / k1};
    if (k0.is_zero()) return WallEverywhere{};
    return WallNowhere{};
}

inline std::string describe(const WallLocus& w) {
    if (auto* c = std::get_if<WallCircle>(&w))
        return "circle center=" + c->center.str() + " radius_sq=" + c->radius_sq.str();
    if (auto* l = std::get_if<WallLine>(&w)) return "vertical_line beta=" + l->beta.str();
    if (std::holds_alternative<WallEverywhere>(w)) return "everywhere";
    return "nowhere";
}

// Points fixed for each genus: the cone/heart point (alpha_g^2, beta_g) and the point used by
// the Kuznetsov destabilizer lists.
inline TiltPoint standard_point(const FanoContext& ctx) {
    switch (ctx.genus) {
        case 6: return {Rational(1, 400), Rational(-9, 10)};
        case 7: return {Rational(71, 7056), Rational(-71, 84)};
        case 8: return {Rational(316, 765625), Rational(-122, 125)};
        case 9: return {Rational(31, 1600), Rational(-31, 40)};
        case 10: return {Rational(5, 3267), Rational(-10, 11)};
        case 12: return {Rational(1, 484), Rational(-19, 22)};
        default: throw std::invalid_argument("no standard tilt point for genus " + std::to_string(ctx.genus));
    }
}

inline TiltPoint destab_point(const FanoContext& ctx) {
    switch (ctx.genus) {
        case 6: return {Rational(1, 400), Rational(-9, 10)};
        case 7: return {Rational(1, 144), Rational(-5, 6)};
        case 8: return {Rational(1, 625), Rational(-22, 25)};
        case 9: return {Rational(1, 64), Rational(-3, 4)};
        case 10: return {Rational(1, 625), Rational(-22, 25)};
        case 12: return {Rational(1, 625), Rational(-21, 25)};
        default: throw std::invalid_argument("no destabilizer tilt point for genus " + std::to_string(ctx.genus));
    }
}

// beta values at which the heart window holds for every 0 < alpha < 1 + beta.
inline std::vector<Rational> window_betas(const FanoContext& ctx) {
    switch (ctx.genus) {
        case 6: return {Rational(-9, 10)};
        case 7: return {Rational(-5, 6), Rational(-71, 84)};
        case 8: return {Rational(-22, 25), Rational(-122, 125)};
        case 9: return {Rational(-3, 4), Rational(-31, 40)};
        case 10: return {Rational(-22, 25), Rational(-10, 11)};
        case 12: return {Rational(-21, 25), Rational(-19, 22)};
        default: return {};
    }
}

}  // namespace fanolat
