#include <doctest.h>

#include <limits>
#include <random>

#include "dirac/rational.hpp"

using dirac::Rational;

TEST_CASE("rational normal form") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(10, 5).is_integer());
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rational parse and print round trip") {
    for (const char* s : {"0", "7", "-3/2", "399/2", "157/2"}) CHECK(Rational::parse(s).str() == s);
    CHECK(Rational::parse("78.5") == Rational(157, 2));
    CHECK(Rational::parse("-0.25") == Rational(-1, 4));
    CHECK(Rational::parse(" 4/6 ") == Rational(2, 3));
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
}

TEST_CASE("rational ordering matches cross multiplication") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> num(-1000, 1000), den(1, 1000);
    for (int i = 0; i < 2000; ++i) {
        std::int64_t a = num(rng), b = den(rng), c = num(rng), d = den(rng);
        Rational x(a, b), y(c, d);
        CHECK((x < y) == (a * d < c * b));
        CHECK(x + y - y == x);
        if (!y.is_zero()) CHECK(x * y / y == x);
    }
}

TEST_CASE("rational overflow is reported") {
    const auto big = std::numeric_limits<std::int64_t>::max() / 2;
    Rational x(big);
    CHECK_THROWS_AS(x * Rational(4), dirac::RationalOverflow);
    CHECK_THROWS_AS(x + x + x, dirac::RationalOverflow);
}
