#include <doctest.h>

#include "fanolat/rational.hpp"

#include <random>

using fanolat::Integer;
using fanolat::Rational;

TEST_CASE("parse and print") {
    CHECK(Rational::parse("-5/6") == Rational(-5, 6));
    CHECK(Rational::parse("10/4").str() == "5/2");
    CHECK(Rational::parse("-4/2").str() == "-2");
    CHECK(Rational::parse("7").str() == "7");
    CHECK(Rational::parse("+3/9").str() == "1/3");
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("abc"));
    CHECK_THROWS(Rational::parse(""));
    CHECK_THROWS(Rational::parse("1.5"));
}

TEST_CASE("arithmetic is exact") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == b);
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == 2);
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK(Rational(-71, 84) < Rational(-5, 6));
    CHECK(fanolat::abs(Rational(-3, 7)) == Rational(3, 7));
    CHECK(fanolat::pow(Rational(2, 3), 3) == Rational(8, 27));
}

TEST_CASE("floor and ceil round toward the right side for negatives") {
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(6, 2).ceil() == 3);
    CHECK(Rational(-6, 3).floor() == -2);
}

TEST_CASE("ceil_sqrt is the least integer whose square is at least n") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long long> dist(0, 1'000'000'000'000LL);
    for (int i = 0; i < 1000; ++i) {
        Integer n(std::to_string(dist(rng)));
        Integer s = fanolat::ceil_sqrt(n);
        CHECK(s * s >= n);
        if (s > 0) CHECK((s - 1) * (s - 1) < n);
    }
    CHECK(fanolat::ceil_sqrt(Integer(16)) == 4);
    CHECK(fanolat::ceil_sqrt(Integer(17)) == 5);
}

TEST_CASE("machine integer conversion refuses overflow") {
    CHECK(fanolat::to_ll(Integer("-9223372036854775808")) == INT64_MIN);
    CHECK_THROWS(fanolat::to_ll(Integer("9223372036854775808")));
}
