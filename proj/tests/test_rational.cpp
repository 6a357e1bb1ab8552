#include "doctest.h"

#include "geninv/errors.hpp"
#include "geninv/rational.hpp"

using namespace geninv;

TEST_CASE("rational parsing covers integers, fractions and decimals") {
    CHECK(parseRational("3") == Rational(3));
    CHECK(parseRational("-7") == Rational(-7));
    CHECK(parseRational("3/6") == Rational(1, 2));
    CHECK(parseRational("-4/8") == Rational(-1, 2));
    CHECK(parseRational("0.5") == Rational(1, 2));
    CHECK(parseRational("-2.125") == Rational(-17, 8));
    CHECK(parseRational("0.3") == Rational(3, 10));
    CHECK(parseRational(" 10/4 ") == Rational(5, 2));
}

TEST_CASE("rational parsing rejects malformed input") {
    CHECK_THROWS_AS(parseRational(""), ParseError);
    CHECK_THROWS_AS(parseRational("1/0"), ParseError);
    CHECK_THROWS_AS(parseRational("1.2.3"), ParseError);
    CHECK_THROWS_AS(parseRational("1/2/3"), ParseError);
    CHECK_THROWS_AS(parseRational("a"), ParseError);
    CHECK_THROWS_AS(parseRational("1e3"), ParseError);
    CHECK_THROWS_AS(parseRational("-"), ParseError);
}

TEST_CASE("formatting is canonical lowest terms") {
    CHECK(formatRational(parseRational("10/4")) == "5/2");
    CHECK(formatRational(parseRational("4/2")) == "2");
    CHECK(formatRational(parseRational("-0.25")) == "-1/4");
    CHECK(formatRational(Rational(0)) == "0");
}

TEST_CASE("scalar arithmetic is exact complex rational arithmetic") {
    Scalar a(Rational(1, 2), Rational(1, 3));
    Scalar b(Rational(2), Rational(-1));
    Scalar prod = a * b;
    CHECK(prod == Scalar(Rational(4, 3), Rational(1, 6)));

    Scalar quotient = prod / b;
    CHECK(quotient == a);

    Scalar conj = a.conj();
    CHECK(conj.re == Rational(1, 2));
    CHECK(conj.im == Rational(-1, 3));
    CHECK((a * conj).im == 0);
    CHECK(a.normSq() == Rational(13, 36));

    CHECK_THROWS_AS(a / Scalar(0), Error);
}

TEST_CASE("scalar formatting distinguishes real and complex values") {
    CHECK(formatScalar(Scalar(Rational(1, 2))) == "1/2");
    CHECK(formatScalar(Scalar(Rational(1), Rational(-2))) == "(1,-2)");
}
