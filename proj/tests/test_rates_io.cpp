#include <catch2/catch_amalgamated.hpp>

#include <debruijn/rates.hpp>
#include <nlohmann/json.hpp>

using namespace debruijn;
using nlohmann::json;

TEST_CASE("rational parsing accepts p/q, integers, and decimals") {
    REQUIRE(parse_rational("3/4") == Rational(3, 4));
    REQUIRE(parse_rational("-7/2") == Rational(-7, 2));
    REQUIRE(parse_rational("5") == Rational(5));
    REQUIRE(parse_rational("0.25") == Rational(1, 4));
    REQUIRE(parse_rational("-3.5") == Rational(-7, 2));
    REQUIRE_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    REQUIRE_THROWS_AS(parse_rational(""), std::invalid_argument);
}

TEST_CASE("rational formatting is p/q or bare integer") {
    REQUIRE(format_rational(Rational(3, 4)) == "3/4");
    REQUIRE(format_rational(Rational(6, 3)) == "2");
    REQUIRE(format_rational(Rational(-1, 8)) == "-1/8");
}

TEST_CASE("rate files round-trip through JSON") {
    json j = {{"n", 2}, {"L", 2},
              {"rates", {{"1,1", "1"}, {"1,2", "2"}, {"2,1", "3"}, {"2,2", "5"}}}};
    RateSystem R = RateSystem::from_json(j);
    REQUIRE(R.rate(1, 1) == 1);
    REQUIRE(R.rate(2, 2) == 5);
    REQUIRE(RateSystem::from_json(R.to_json()).to_json() == R.to_json());
}

TEST_CASE("decimal and fractional rate entries parse exactly") {
    json j = {{"n", 2}, {"L", 1}, {"rates", {{"1,1", "0.5"}, {"2,1", "7/3"}}}};
    RateSystem R = RateSystem::from_json(j);
    REQUIRE(R.rate(1, 1) == Rational(1, 2));
    REQUIRE(R.rate(2, 1) == Rational(7, 3));
}

TEST_CASE("missing rate entries are an error, not defaulted") {
    json j = {{"n", 2}, {"L", 2},
              {"rates", {{"1,1", "1"}, {"1,2", "2"}, {"2,1", "3"}}}};
    REQUIRE_THROWS_WITH(RateSystem::from_json(j),
                        Catch::Matchers::ContainsSubstring("(2,2)"));
}

TEST_CASE("nonpositive rates are rejected") {
    json j = {{"n", 2}, {"L", 1}, {"rates", {{"1,1", "0"}, {"2,1", "3"}}}};
    REQUIRE_THROWS_AS(RateSystem::from_json(j), std::invalid_argument);
    json neg = {{"n", 2}, {"L", 1}, {"rates", {{"1,1", "-1"}, {"2,1", "3"}}}};
    REQUIRE_THROWS_AS(RateSystem::from_json(neg), std::invalid_argument);
}

TEST_CASE("out-of-range and malformed keys are rejected") {
    json j = {{"n", 2}, {"L", 1}, {"rates", {{"3,1", "1"}, {"1,1", "1"}, {"2,1", "1"}}}};
    REQUIRE_THROWS_AS(RateSystem::from_json(j), std::invalid_argument);
    json bad = {{"n", 2}, {"L", 1}, {"rates", {{"11", "1"}}}};
    REQUIRE_THROWS_AS(RateSystem::from_json(bad), std::invalid_argument);
}

TEST_CASE("depth caps clamp to L") {
    RateSystem R(2, 2, {{Rational(1), Rational(2)}, {Rational(3), Rational(5)}});
    REQUIRE(R.rate_capped(1, 3) == R.rate(1, 2));
    RateSystem ext = R.extend_by_one();
    REQUIRE(ext.L() == 3);
    REQUIRE(ext.rate(1, 3) == R.rate(1, 2));
    REQUIRE(ext.rate(2, 3) == R.rate(2, 2));
}
