#include "doctest.h"
#include "gwcut/rational.hpp"

using gwcut::Rational;

TEST_SUITE("rational") {

TEST_CASE("normalization and arithmetic") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(7, 3).str() == "7/3");
    CHECK(Rational(6, 3).str() == "2");
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), std::domain_error);
}

TEST_CASE("harmonic-style sums stay exact") {
    Rational sum(0);
    for (int m = 1; m <= 7; ++m) sum += Rational(1, m);
    CHECK(sum == Rational(363, 140));
}

}  // TEST_SUITE
