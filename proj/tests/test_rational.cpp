#include <doctest.h>

#include <sstream>

#include "altpoly/errors.hpp"
#include "altpoly/rational.hpp"

using altpoly::Rational;

TEST_CASE("rational construction canonicalizes") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-1, -2).str() == "1/2");
    CHECK(Rational(1, -2).str() == "-1/2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(7).str() == "7");
    CHECK(Rational(-3L).str() == "-3");
    CHECK_THROWS_AS(Rational(1, 0), altpoly::Error);
}

TEST_CASE("rational predicates") {
    CHECK(Rational(0).is_zero());
    CHECK_FALSE(Rational(1, 3).is_zero());
    CHECK(Rational(6, 3).is_integer());
    CHECK_FALSE(Rational(1, 3).is_integer());
    CHECK(Rational(-5, 2).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(5, 2).sign() == 1);
}

TEST_CASE("rational parsing accepts the canonical grammar") {
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse("-7/2") == Rational(-7, 2));
    CHECK(Rational::parse("0") == Rational(0));
    CHECK(Rational::parse("4/6") == Rational(2, 3));
    const Rational q(-22, 7);
    CHECK(Rational::parse(q.str()) == q);
}

TEST_CASE("rational parsing rejects malformed strings") {
    for (const char* bad : {"", "/", "1/", "/2", "1/-2", "--3", "1.5", "a", "1 /2", "+3", "1/0"})
        CHECK_THROWS_AS(Rational::parse(bad), altpoly::ParseError);
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(2, 3) / Rational(4, 3) == Rational(1, 2));
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), altpoly::Error);
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1) <= Rational(-1));
    CHECK(Rational(3, 2) > Rational(1));
    CHECK(Rational(1, 2) != Rational(1, 3));
}

TEST_CASE("rational pow and abs") {
    CHECK(altpoly::pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(altpoly::pow(Rational(-1, 2), 2) == Rational(1, 4));
    CHECK(altpoly::pow(Rational(5), 0) == Rational(1));
    CHECK(altpoly::pow(Rational(0), 0) == Rational(1));
    CHECK(altpoly::abs(Rational(-7, 3)) == Rational(7, 3));
    CHECK(altpoly::abs(Rational(7, 3)) == Rational(7, 3));
}

TEST_CASE("rational streaming matches str") {
    std::ostringstream os;
    os << Rational(-5, 4);
    CHECK(os.str() == "-5/4");
}
