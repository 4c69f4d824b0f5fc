#include <doctest.h>

#include "fanolat/constraints/evaluator.hpp"
#include "fanolat/constraints/generate.hpp"
#include "fanolat/constraints/printer.hpp"
#include "fanolat/search/destab.hpp"

#include <random>

using namespace fanolat;
using namespace fanolat::dsl;

namespace {

bool holds(const std::string& text, const Env& env) { return !solve(parse(text), env).empty(); }

Env env_at(int genus) {
    const FanoContext ctx = context(genus, genus == 6 ? Variant::ordinary : Variant::not_applicable);
    return Env{ctx, standard_point(ctx), std::nullopt, std::nullopt};
}

}  // namespace

TEST_CASE("syntax errors carry a position and the expected tokens") {
    try {
        parse("var a in [0, 3];\nlet A = a*v +;\n");
        FAIL("no error");
    } catch (const SyntaxError& e) {
        CHECK(e.pos.line == 2);
        CHECK(e.pos.col == 14);
        CHECK(e.found == "';'");
        CHECK_FALSE(e.expected.empty());
        CHECK(std::string(e.what()).find("line 2, column 14") != std::string::npos);
    }
    CHECK_THROWS_AS(parse("var a in [0 3];"), SyntaxError);
    CHECK_THROWS_AS(parse("1 < 2;;"), SyntaxError);
    CHECK_THROWS_AS(parse("var 3 in [0, 1];"), SyntaxError);
}

TEST_CASE("unknown names list what is known") {
    try {
        parse("mu0(Z) > 0;");
        FAIL("no error");
    } catch (const NameError& e) {
        const std::string m = e.what();
        CHECK(m.find("'Z'") != std::string::npos);
        CHECK(m.find("I_x") != std::string::npos);
        CHECK(m.find("target") != std::string::npos);
    }
    CHECK_THROWS_AS(parse("foo(v) > 0;"), NameError);
    CHECK_THROWS_AS(parse("var a in [3, 1];"), NameError);
    CHECK_THROWS_AS(parse("let A = v; let A = w;"), NameError);
}

TEST_CASE("type errors") {
    CHECK_THROWS_AS(parse("mu0(v) + 1 > 0;"), TypeError);
    CHECK_THROWS_AS(parse("v * w > 0;"), TypeError);
    CHECK_THROWS_AS(parse("ch0(v);"), TypeError);
    CHECK_THROWS_AS(parse("chi(v) > 0;"), TypeError);
    CHECK_THROWS_AS(parse("not ch0(v) > 0;"), TypeError);
    CHECK_NOTHROW(parse("not (ch0(v) > 0);"));
    CHECK_NOTHROW(parse("mu(v) < mu(w);"));
}

TEST_CASE("evaluation: constants, chains, logic") {
    const Env env = env_at(7);
    CHECK(holds("1 < 2;", env));
    CHECK_FALSE(holds("2 < 1;", env));
    CHECK(holds("1 < 2 <= 2 < 3;", env));
    CHECK_FALSE(holds("1 < 3 < 2;", env));
    CHECK(holds("1/3 + 1/6 = 1/2;", env));
    CHECK(holds("1 > 2 or 2 > 1;", env));
    CHECK_FALSE(holds("1 > 2 and 2 > 1;", env));
    CHECK(holds("not (1 > 2);", env));
    CHECK(holds("ch0(v) = 2 and ch1(v) = 0 and ch0(w) = 0 and ch1(w) = 1;", env));
    CHECK(holds("chi(sky, sky) = -24;", env));
    CHECK(holds("twistH(O, 1) = O + H + 6*L + 2*P;", env));
    CHECK(holds("mu(O) < mu(O - O);", env));  // zero class: slope +inf
}

TEST_CASE("evaluation errors are not silent falsehoods") {
    const Env env = env_at(7);
    CHECK_THROWS_AS(holds("1/0 > 0;", env), EvalError);
    CHECK_THROWS_AS(holds("chi(target, O) > 0;", env), EvalError);
    CHECK_THROWS_AS(holds("bound > 0;", env), EvalError);
    const Env g5{context(5), TiltPoint(1, 0), std::nullopt, std::nullopt};
    CHECK_THROWS_AS(holds("ch0(v) > 0;", g5), EvalError);
    CHECK_THROWS_AS(solve(parse("a > 0;"), env), EvalError);  // implicit variable, no range
    CHECK(solve(parse("a > 0; a < 3;"), env, std::vector<Interval>{{-5, 5}}) == std::vector<Tuple>{{1}, {2}});
}

TEST_CASE("printed trees parse back to themselves (1000 random trees)") {
    TreeGenerator gen(123);
    int same = 0;
    for (int i = 0; i < 1000; ++i) {
        NodePtr t = gen.boolean(3);
        const std::string text = pretty_print(t);
        NodePtr back = Parser(text).single_expression();
        if (same_tree(t, back)) ++same;
        else FAIL_CHECK("round trip differs: " << text);
    }
    CHECK(same == 1000);
}

TEST_CASE("printed systems parse back to equal systems") {
    const char* text = "var a in [-3, 3];\nlet A = a*v + 2*w - (O - H);\n-a*-a < 2 - (1 - a);\nnot (A = O) or mu0(A) >= mu0(E);\n";
    const ConstraintSystem s = parse(text);
    CHECK(parse(pretty_print(s)) == s);
    CHECK(pretty_print(parse(pretty_print(s))) == pretty_print(s));
}

TEST_CASE("slope comparisons agree with the library (1000 random charges)") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> n(-6, 6);
    const FanoContext ctx = context(8);
    int checked = 0;
    for (int i = 0; i < 1000; ++i) {
        const long long a1 = n(rng), b1 = n(rng), a2 = n(rng), b2 = n(rng);
        const int k = n(rng);
        const TiltPoint pt(Rational(1 + k * k, 50), Rational(n(rng), 7));
        const Env env{ctx, pt, std::nullopt, std::nullopt};
        const ChernCharacter x = ku_basis(ctx).combo(a1, b1), y = ku_basis(ctx).combo(a2, b2);
        const std::string X = std::to_string(a1) + "*v + " + std::to_string(b1) + "*w";
        const std::string Y = std::to_string(a2) + "*v + " + std::to_string(b2) + "*w";
        const Cmp c = slope_cmp(rotated_slope(x, pt, ctx), rotated_slope(y, pt, ctx));
        CHECK(holds("mu0(" + X + ") < mu0(" + Y + ");", env) == (c == Cmp::lt));
        CHECK(holds("mu0(" + X + ") = mu0(" + Y + ");", env) == (c == Cmp::eq));
        const Cmp t = slope_cmp(tilt_slope(x, pt, ctx), tilt_slope(y, pt, ctx));
        CHECK(holds("mu(" + X + ") >= mu(" + Y + ");", env) == (t != Cmp::lt));
        ++checked;
    }
    CHECK(checked == 1000);
}

TEST_CASE("four unknowns with an explicit box") {
    const FanoContext ctx = context(8);
    const auto t = default_destab_target(ctx);
    const Env env{ctx, destab_point(ctx), ku_basis(ctx).combo(t.a, t.b), Rational(8)};
    const ConstraintSystem sys = parse(
        "let A = a*v + b*w;\nlet B = c*v + d*w;\n"
        "A + B = target;\nnot (A = target); not (B = target);\n"
        "imZ0(A)*imZ0(target) >= 0; imZ0(B)*imZ0(target) >= 0;\n"
        "mu0(A) > mu0(B);\n(1 - chi(A, A)) + (1 - chi(B, B)) <= bound;\n");
    REQUIRE(sys.variables.size() == 4);
    const std::vector<Interval> box(4, Interval{-6, 6});
    const auto got = solve(sys, env, box);
    std::vector<Tuple> want;
    for (auto& s : find_ku_destabilizers(t, ctx, destab_point(ctx), 8).solutions) want.push_back({s[0], s[1], s[2], s[3]});
    CHECK(got == want);
}

TEST_CASE("the sign form of the wall equation at one pair") {
    const FanoContext ctx = context(7);
    const Env env{ctx, TiltPoint(1, Rational(-5, 6)), ChernCharacter{5, -2, 0, 0}, std::nullopt};
    const std::string A = "(2*one - H + 2*L)";
    CHECK(holds("(ch2beta(" + A + ")*imZ(target) - ch2beta(target)*imZ(" + A + ")) * (ch0(" + A +
                    ")*imZ(target) - ch0(target)*imZ(" + A + ")) > 0;",
                env));
}
