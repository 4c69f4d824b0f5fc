#include <doctest.h>

#include "fanolat/io.hpp"
#include "fanolat/plot.hpp"
#include "oracles.hpp"

#include <random>

using namespace fanolat;

TEST_CASE("rationals and classes survive a JSON round trip") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 1000; ++i) {
        const ChernCharacter x = oracle::random_class(rng);
        const json j = json::parse(to_json(x).dump());
        CHECK(chern_from_json(j) == x);
        CHECK(rational_from_json(to_json(x.l)) == x.l);
    }
    CHECK(rational_from_json(json(-7)) == Rational(-7));
    CHECK_THROWS_AS(rational_from_json(json(1.5)), std::invalid_argument);
    CHECK_THROWS_AS(chern_from_json(json::array({"1", "2"})), std::invalid_argument);
}

TEST_CASE("search output is byte-identical across thread counts") {
    SearchOptions one, many;
    one.threads = 1;
    many.threads = 3;
    const FanoContext g7 = context(7);
    CHECK(to_json(find_tilt_walls({5, -2, 0}, Rational(-5, 6), g7, one), one, false).dump() ==
          to_json(find_tilt_walls({5, -2, 0}, Rational(-5, 6), g7, many), one, false).dump());
    const FanoContext g8 = context(8);
    const auto t = default_destab_target(g8);
    CHECK(to_json(find_ku_destabilizers(t, g8, destab_point(g8), 8, one), one).dump() ==
          to_json(find_ku_destabilizers(t, g8, destab_point(g8), 8, many), one).dump());
    CHECK(to_json(solve_cone_system(ConePreset::A8, g7, one), g7, one).dump() ==
          to_json(solve_cone_system(ConePreset::A8, g7, many), g7, one).dump());
}

TEST_CASE("search JSON carries the search box and completeness") {
    const auto r = find_tilt_walls({5, -2, 0}, Rational(-5, 6), context(7));
    const json j = to_json(r, {}, false);
    CHECK(j["complete"] == true);
    CHECK(j["solutions"].size() == 15);
    CHECK(j["ordered_count"] == 30);
    CHECK(j["search_box"].size() == 3);
    CHECK(j["beta"] == "-5/6");
}

TEST_CASE("plot samples lie on the circle") {
    const FanoContext ctx = context(7);
    const WallLocus w = wall_locus({2, -1, 2, 0}, {5, -2, 0, 0}, ctx);
    const auto* c = std::get_if<WallCircle>(&w);
    REQUIRE(c);
    CHECK(c->center == Rational(-5, 6));
    CHECK(c->radius_sq == Rational(1, 36));
    PlotWindow win;
    const auto s = sample_loci({{"x,\"y\"", w}}, win);
    REQUIRE_FALSE(s.empty());
    for (auto& p : s) CHECK(std::abs((p.beta + 5.0 / 6) * (p.beta + 5.0 / 6) + p.alpha * p.alpha - 1.0 / 36) < 1e-9);
    const std::string csv = samples_csv(s);
    CHECK(csv.rfind("label,beta,alpha\n\"x,\"\"y\"\"\",", 0) == 0);
    CHECK(samples_svg(s, win).find("<polyline") != std::string::npos);
}
