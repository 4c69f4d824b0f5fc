#pragma once

#include "lattice.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fanolat {

enum class Variant { not_applicable, ordinary, special };

inline std::string to_string(Variant v) {
    switch (v) {
        case Variant::ordinary: return "ordinary";
        case Variant::special: return "special";
        default: return "n/a";
    }
}

struct FanoContext {
    int genus = 0;
    Rational degree;
    Variant variant = Variant::not_applicable;
    ChernCharacter todd;

    int d_int() const { return 2 * genus - 2; }
    bool even() const { return genus % 2 == 0; }
};

inline bool supported_genus(int g) { return (g >= 2 && g <= 10) || g == 12; }

// Genus 6 without an explicit variant is taken as ordinary; the lattice does not depend on it.
inline FanoContext context(int genus, Variant variant = Variant::not_applicable) {
    if (!supported_genus(genus))
        throw std::invalid_argument("unsupported genus " + std::to_string(genus) +
                                    " (supported: 2..10, 12)");
    if (genus != 6 && variant != Variant::not_applicable)
        throw std::invalid_argument("ordinary/special applies to genus 6 only");
    if (genus == 6 && variant == Variant::not_applicable) variant = Variant::ordinary;
    return FanoContext{genus, Rational(2 * genus - 2), variant, todd_class(genus)};
}

inline Rational chi(const FanoContext& ctx, const ChernCharacter& x, const ChernCharacter& y) {
    return euler_pairing(x, y, ctx.genus);
}

using Matrix2 = std::array<std::array<Rational, 2>, 2>;

enum class BasisKind { ku, alternative };

struct LatticeBasis {
    BasisKind kind;
    ChernCharacter b1, b2;
    Matrix2 euler_matrix;

    ChernCharacter combo(const Rational& a, const Rational& b) const { return a * b1 + b * b2; }
};

inline LatticeBasis make_basis(const FanoContext& ctx, BasisKind kind, ChernCharacter b1, ChernCharacter b2) {
    Matrix2 m{{{chi(ctx, b1, b1), chi(ctx, b1, b2)}, {chi(ctx, b2, b1), chi(ctx, b2, b2)}}};
    return {kind, std::move(b1), std::move(b2), m};
}

inline LatticeBasis ku_basis(const FanoContext& ctx) {
    const int g = ctx.genus;
    if (g <= 5)
        throw std::invalid_argument("Kuznetsov component is O_X-perp; no rank-two basis for genus " +
                                    std::to_string(g));
    if (g == 7) return make_basis(ctx, BasisKind::ku, {2, 0, -5, Rational(1, 2)}, {0, 1, -6, 0});
    if (g == 9) return make_basis(ctx, BasisKind::ku, {1, 0, -3, Rational(1, 2)}, {0, 1, -8, Rational(2, 3)});
    return make_basis(ctx, BasisKind::ku, {1, 0, Rational(-g, 2), Rational(g - 4, 4)},
                      {0, 1, Rational(-(3 * g - 6), 2), Rational(7 * g - 40, 12)});
}

inline LatticeBasis alt_basis(const FanoContext& ctx) {
    const int g = ctx.genus;
    if (g < 6 || g % 2 != 0)
        throw std::invalid_argument("alternative basis needs even genus >= 6, got " + std::to_string(g));
    return make_basis(ctx, BasisKind::alternative, {1, 0, -2, 0},
                      {0, 1, -Rational(g / 2 + 1), -Rational(16 - g, 12)});
}

inline ChernCharacter exceptional_bundle(const FanoContext& ctx) {
    switch (ctx.genus) {
        case 6: return {2, -1, 1, Rational(1, 3)};
        case 7: return {5, -2, 0, 1};
        case 8: return {2, -1, 2, Rational(1, 6)};
        case 9: return {3, -1, 0, Rational(1, 3)};
        case 10: return {2, -1, 3, 0};
        case 12: return {2, -1, 4, Rational(-1, 6)};
        default:
            throw std::invalid_argument("no exceptional bundle E for genus " + std::to_string(ctx.genus));
    }
}

// Coordinates of ch(i^* O_x) in the Kuznetsov basis.
inline std::array<long long, 2> skyscraper_coords(const FanoContext& ctx) {
    const int g = ctx.genus;
    if (g < 6) throw std::invalid_argument("skyscraper projection needs genus >= 6");
    if (g == 7) return {12, -10};
    if (g == 9) return {8, -3};
    return {g - 1, -g / 2};
}

inline const std::vector<std::string>& named_class_names() {
    static const std::vector<std::string> names{
        "O", "O(-H)", "O_x", "I_x", "E", "E(-H)", "Q", "Q(-H)", "skyscraper_projection", "gluing_Ku"};
    return names;
}

inline ChernCharacter named_class(const FanoContext& ctx, const std::string& name) {
    const Rational& d = ctx.degree;
    const ChernCharacter O{1, 0, 0, 0};
    auto need_even = [&](const std::string& what) {
        if (!ctx.even() || ctx.genus < 6)
            throw std::invalid_argument(what + " is defined for even genus >= 6 only");
    };
    auto Q = [&] {
        need_even("Q");
        return Rational(ctx.genus / 2 + 2) * O - exceptional_bundle(ctx);
    };
    if (name == "O") return O;
    if (name == "O(-H)") return exp_line(-1, d);
    if (name == "O_x") return {0, 0, 0, 1};
    if (name == "I_x") return {1, 0, 0, -1};
    if (name == "E") return exceptional_bundle(ctx);
    if (name == "E(-H)") return twist_line(exceptional_bundle(ctx), -1, d);
    if (name == "Q") return Q();
    if (name == "Q(-H)") return twist_line(Q(), -1, d);
    if (name == "skyscraper_projection") {
        auto k = skyscraper_coords(ctx);
        return ku_basis(ctx).combo(k[0], k[1]);
    }
    if (name == "gluing_Ku") {
        need_even("gluing_Ku");
        return exceptional_bundle(ctx) - twist_line(Q(), -1, d);
    }
    std::string all;
    for (auto& n : named_class_names()) all += (all.empty() ? "" : ", ") + n;
    throw std::invalid_argument("unknown class '" + name + "'; known: " + all);
}

struct KuClassCoords {
    long long a = 0, b = 0;
    std::optional<long long> c;

    friend bool operator==(const KuClassCoords&, const KuClassCoords&) = default;
};

inline ChernCharacter to_chern(const FanoContext& ctx, const LatticeBasis& basis, const KuClassCoords& k) {
    ChernCharacter x = basis.combo(Rational(k.a), Rational(k.b));
    if (k.c) x += Rational(*k.c) * exceptional_bundle(ctx);
    return x;
}

// nullopt means x is not an integral combination of the basis.
inline std::optional<KuClassCoords> coords_of(const LatticeBasis& basis, const ChernCharacter& x) {
    const auto &u = basis.b1, &w = basis.b2;
    Rational det = u.r * w.c - w.r * u.c;
    if (det.is_zero()) throw std::logic_error("degenerate basis");
    Rational a = (x.r * w.c - w.r * x.c) / det;
    Rational b = (u.r * x.c - x.r * u.c) / det;
    if (!a.is_integer() || !b.is_integer()) return std::nullopt;
    if (basis.combo(a, b) != x) return std::nullopt;
    return KuClassCoords{to_ll(a.num()), to_ll(b.num()), std::nullopt};
}

}  // namespace fanolat
