#include "doctest.h"
#include "maskcheck/exact.hpp"

using namespace maskcheck;

TEST_SUITE_BEGIN("exact");

TEST_CASE("parse_rational accepts fractions, decimals and scientific notation") {
    CHECK(*parse_rational("1/2") == Rational(1, 2));
    CHECK(*parse_rational("-5/4") == Rational(-5, 4));
    CHECK(*parse_rational("3") == Rational(3));
    CHECK(*parse_rational("-0.125") == Rational(-1, 8));
    CHECK(*parse_rational("0.1") == Rational(1, 10));
    CHECK(*parse_rational("1e-3") == Rational(1, 1000));
    CHECK(*parse_rational("2.5e-3") == Rational(1, 400));
    CHECK(*parse_rational("12e2") == Rational(1200));
    CHECK(*parse_rational(" -1 ") == Rational(-1));
}

TEST_CASE("parse_rational rejects malformed input") {
    CHECK(!parse_rational(""));
    CHECK(!parse_rational("abc"));
    CHECK(!parse_rational("1/0"));
    CHECK(!parse_rational("1.2.3"));
    CHECK(!parse_rational("1e"));
    CHECK(!parse_rational("."));
}

TEST_CASE("parse_rational_complex") {
    auto z = parse_rational_complex("1+2i");
    REQUIRE(z);
    CHECK(z->re == Rational(1));
    CHECK(z->im == Rational(2));

    z = parse_rational_complex("-1-0.5i");
    REQUIRE(z);
    CHECK(z->re == Rational(-1));
    CHECK(z->im == Rational(-1, 2));

    z = parse_rational_complex("i");
    REQUIRE(z);
    CHECK(z->re == 0);
    CHECK(z->im == 1);

    z = parse_rational_complex("-i");
    REQUIRE(z);
    CHECK(z->im == -1);

    z = parse_rational_complex("1/2i");
    REQUIRE(z);
    CHECK(z->re == 0);
    CHECK(z->im == Rational(1, 2));

    z = parse_rational_complex("-3");
    REQUIRE(z);
    CHECK(z->is_real());
    CHECK(z->re == -3);

    CHECK(!parse_rational_complex("1+i2"));
    CHECK(!parse_rational_complex(""));
}

TEST_CASE("binomial and multinomial") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(10, 10) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(multinomial3(4, 2, 1, 1) == 12);
    CHECK(multinomial3(6, 6, 0, 0) == 1);
    CHECK_THROWS_AS(multinomial3(4, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("pow2_inverse") {
    CHECK(pow2_inverse(0) == 1);
    CHECK(pow2_inverse(3) == Rational(1, 8));
    CHECK(pow2_inverse(70) == Rational(Integer(1), Integer(1) << 70));
}

TEST_SUITE_END();
