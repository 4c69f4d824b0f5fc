#include <doctest.h>

#include "fanolat/constraints/evaluator.hpp"
#include "fanolat/search/destab.hpp"
#include "oracles.hpp"

#include <fstream>
#include <sstream>

using namespace fanolat;

namespace {

struct Case {
    const char* name;
    int genus;
    Variant variant;
    long long bound;
    std::vector<DestabSolution> expected;
};

const std::vector<Case> cases{
    {"6 ordinary", 6, Variant::ordinary, 6, {{-2, 1, -3, 2}}},
    {"6 special", 6, Variant::special, 7, {{-4, 2, -1, 1}, {-2, 1, -3, 2}}},
    {"7", 7, Variant::not_applicable, 25, {}},
    {"8", 8, Variant::not_applicable, 8, {{-4, 2, -3, 2}, {-2, 1, -5, 3}}},
    {"9", 9, Variant::not_applicable, 9, {}},
    {"10", 10, Variant::not_applicable, 10, {}},
    {"12", 12, Variant::not_applicable, 12, {}},
};

// Conditions re-derived by hand: Z0 = d ch1^beta + i (H ch2^beta - alpha^2 d r / 2), slope -re/im or +inf.
bool by_hand(const FanoContext& ctx, long long a, long long b, long long ta, long long tb, const TiltPoint& pt,
             long long bound) {
    const LatticeBasis ku = ku_basis(ctx);
    const Rational d = ctx.degree;
    const Rational& s = pt.beta;
    auto im = [&](const ChernCharacter& x) { return x.l - s * d * x.c + s * s * d * x.r / 2 - pt.alpha_sq * d * x.r / 2; };
    auto re = [&](const ChernCharacter& x) { return d * (x.c - s * x.r); };
    const ChernCharacter A = Rational(a) * ku.b1 + Rational(b) * ku.b2;
    const ChernCharacter B = Rational(ta - a) * ku.b1 + Rational(tb - b) * ku.b2;
    const ChernCharacter T = Rational(ta) * ku.b1 + Rational(tb) * ku.b2;
    if ((a == 0 && b == 0) || (a == ta && b == tb)) return false;
    if ((im(A) * im(T)).sign() < 0 || (im(B) * im(T)).sign() < 0) return false;
    // a non-positive imaginary part means slope +inf
    const bool ia = im(A).sign() <= 0, ib = im(B).sign() <= 0;
    bool gt;
    if (ia) gt = !ib;
    else if (ib) gt = false;
    else gt = -re(A) / im(A) > -re(B) / im(B);
    if (!gt) return false;
    return 2 - oracle::chi(A, A, ctx.genus) - oracle::chi(B, B, ctx.genus) <= Rational(bound);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("ext^1 budgets and targets") {
    for (auto& c : cases) {
        const FanoContext ctx = context(c.genus, c.variant);
        CHECK(default_ext1_bound(ctx) == c.bound);
        const auto t = default_destab_target(ctx);
        // the target is -[i^*O_x]; its self-pairing is the skyscraper's
        CHECK(oracle::chi(ku_basis(ctx).combo(t.a, t.b), ku_basis(ctx).combo(t.a, t.b), c.genus) ==
              chi(ctx, named_class(ctx, "skyscraper_projection"), named_class(ctx, "skyscraper_projection")));
    }
    CHECK_THROWS_AS(default_ext1_bound(context(5)), std::invalid_argument);
}

TEST_CASE("destabilizer lists at the fixed points") {
    for (auto& c : cases) {
        CAPTURE(c.name);
        const FanoContext ctx = context(c.genus, c.variant);
        const auto r = find_ku_destabilizers(default_destab_target(ctx), ctx, destab_point(ctx), c.bound);
        CHECK(r.meta.complete);
        CHECK(r.solutions == c.expected);
    }
}

TEST_CASE("hand-derived conditions agree on [-20, 20]^2") {
    for (auto& c : cases) {
        CAPTURE(c.name);
        const FanoContext ctx = context(c.genus, c.variant);
        const auto t = default_destab_target(ctx);
        const TiltPoint pt = destab_point(ctx);
        std::vector<DestabSolution> hand;
        for (long long a = -20; a <= 20; ++a)
            for (long long b = -20; b <= 20; ++b)
                if (by_hand(ctx, a, b, t.a, t.b, pt, c.bound)) hand.push_back({a, b, t.a - a, t.b - b});
        CHECK(hand == c.expected);
    }
}

TEST_CASE("the (-4, 2) destabilizer is chi-orthogonal to its quotient") {
    for (auto [g, v] : std::vector<std::pair<int, Variant>>{{6, Variant::special}, {8, Variant::not_applicable}}) {
        const FanoContext ctx = context(g, v);
        const LatticeBasis ku = ku_basis(ctx);
        const auto t = default_destab_target(ctx);
        const ChernCharacter A = ku.combo(-4, 2), B = ku.combo(t.a + 4, t.b - 2);
        CHECK(oracle::chi(B, A, g) == 0);
        CHECK(chi(ctx, B, A) == 0);
    }
}

TEST_CASE("a target with zero imaginary part leaves the search unbounded") {
    const FanoContext ctx = context(8);
    const KuClassCoords zero{0, 0, std::nullopt};
    const auto r = find_ku_destabilizers(zero, ctx, destab_point(ctx), 8);
    CHECK_FALSE(r.meta.complete);
    CHECK_FALSE(r.meta.warnings.empty());
    SearchOptions strict;
    strict.require_bounded = true;
    CHECK_THROWS_AS(find_ku_destabilizers(zero, ctx, destab_point(ctx), 8, strict), UnboundedRegion);
}

TEST_CASE("small genus is rejected") {
    CHECK_THROWS_AS(find_ku_destabilizers({1, 1, std::nullopt}, context(5), TiltPoint(1, 0), 5), std::invalid_argument);
}

TEST_CASE("thread count does not change the answer") {
    const FanoContext ctx = context(6, Variant::special);
    SearchOptions one, four;
    one.threads = 1;
    four.threads = 4;
    const auto t = default_destab_target(ctx);
    auto r1 = find_ku_destabilizers(t, ctx, destab_point(ctx), 7, one);
    auto r4 = find_ku_destabilizers(t, ctx, destab_point(ctx), 7, four);
    CHECK(r1.solutions == r4.solutions);
    REQUIRE(r1.meta.box.size() == r4.meta.box.size());
    for (std::size_t i = 0; i < r1.meta.box.size(); ++i) {
        CHECK(r1.meta.box[i].lo == r4.meta.box[i].lo);
        CHECK(r1.meta.box[i].hi == r4.meta.box[i].hi);
    }
}

TEST_CASE("text encoding of the destabilizer conditions") {
    const dsl::ConstraintSystem sys = dsl::parse(slurp(std::string(FANOLAT_SYSTEMS_DIR) + "/destab.cst"));
    for (auto& c : cases) {
        CAPTURE(c.name);
        const FanoContext ctx = context(c.genus, c.variant);
        const auto t = default_destab_target(ctx);
        dsl::Env env{ctx, destab_point(ctx), ku_basis(ctx).combo(t.a, t.b), Rational(c.bound)};
        std::vector<Tuple> expected;
        for (auto& s : c.expected) expected.push_back({s[0], s[1]});
        CHECK(dsl::solve(sys, env) == expected);
    }
}

TEST_CASE("dropping the slope clause at genus 7 admits more splittings") {
    std::string text = slurp(std::string(FANOLAT_SYSTEMS_DIR) + "/destab.cst");
    const auto at = text.find("mu0(A) > mu0(B);");
    REQUIRE(at != std::string::npos);
    text.erase(at, std::string("mu0(A) > mu0(B);").size());
    const FanoContext ctx = context(7);
    const auto t = default_destab_target(ctx);
    dsl::Env env{ctx, destab_point(ctx), ku_basis(ctx).combo(t.a, t.b), Rational(25)};
    const auto loose = dsl::solve(dsl::parse(text), env);
    CHECK_FALSE(loose.empty());
    // every loose solution fails only on the slope: the reversed pair must also be loose
    for (auto& s : loose) {
        Tuple rev{t.a - s[0], t.b - s[1]};
        CHECK(std::binary_search(loose.begin(), loose.end(), rev));
    }
}
