#include <doctest.h>

#include <stdexcept>

#include "hlag/rational.hpp"

using hlag::Rational;

TEST_CASE("rational arithmetic and normal form") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, 4) * Rational(2, 3) == Rational(1, 6));
    CHECK(Rational(17, 256) > Rational(16, 256));
    CHECK(Rational(-1, -2) == Rational(1, 2));
    CHECK((Rational(3, 4) - Rational(3, 4)) == Rational(0));
    CHECK(Rational(1, 3).to_string() == "1/3");
    CHECK(Rational(4, 2).to_string() == "2");
    CHECK(Rational(-2, 4).to_string() == "-1/2");
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK(Rational(1, 8).to_double() == doctest::Approx(0.125));
}
