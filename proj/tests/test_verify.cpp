#include <doctest.h>

#include "fanolat/verify.hpp"

using namespace fanolat;

namespace {

std::vector<std::string> failing(const verify::Report& r) {
    std::vector<std::string> ids;
    for (auto& c : r.checks)
        if (!c.pass) ids.push_back(c.id);
    return ids;
}

}  // namespace

TEST_CASE("every check passes") {
    const auto r = verify::run({}, {}, 1);
    CHECK(r.checks.size() == 12);
    CHECK(failing(r).empty());
    CHECK(r.all_pass());
    CHECK(verify::summary(r).find("12/12 checks passed") != std::string::npos);
}

TEST_CASE("each injected fault fails exactly its check") {
    const std::vector<std::pair<std::string, std::string>> faults{
        {"euler-matrix", "lemma-A1"}, {"destab-list", "lemma-A8"}, {"wall-list", "lemma-A4"}};
    for (auto& [fault, id] : faults) {
        CAPTURE(fault);
        const auto r = verify::run({}, fault, 1);
        CHECK(failing(r) == std::vector<std::string>{id});
        CHECK_FALSE(r.all_pass());
    }
    json fx = verify::fixtures();
    CHECK_THROWS_AS(verify::inject_fault(fx, "no-such-fault"), std::invalid_argument);
}

TEST_CASE("a subset of checks") {
    const auto r = verify::run({"lemma-A2", "lemma-A3"}, {}, 1);
    REQUIRE(r.checks.size() == 2);
    CHECK(r.checks[0].id == "lemma-A2");
    CHECK(r.all_pass());
    CHECK_THROWS(verify::run({"lemma-A99"}));
}

TEST_CASE("the JSON report mirrors the summary") {
    const auto r = verify::run({"lemma-A1"}, "euler-matrix", 1);
    const json j = verify::to_json(r);
    CHECK(j.dump().find("lemma-A1") != std::string::npos);
    CHECK(verify::summary(r).rfind("FAIL lemma-A1", 0) == 0);
}
