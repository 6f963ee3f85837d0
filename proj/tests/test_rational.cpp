#include <doctest.h>

#include "affbgg/rational.hpp"

using namespace affbgg;

TEST_CASE("rational arithmetic is exact and normalized") {
    CHECK(Rat(1, 2) + Rat(1, 3) == Rat(5, 6));
    CHECK(Rat(2, 4) == Rat(1, 2));
    CHECK(Rat(-3, -6) == Rat(1, 2));
    CHECK(Rat(1, -2) == Rat(-1, 2));
    CHECK(Rat(7, 3) * Rat(3, 7) == Rat(1));
    CHECK((Rat(5, 2) / Rat(5)) == Rat(1, 2));
    CHECK(Rat(-7, 2).floor() == -4);
    CHECK(Rat(7, 2).floor() == 3);
    CHECK(Rat(-7, 2).ceil() == -3);
    CHECK(Rat(3, 2) < Rat(5, 3));
    CHECK(Rat(0).is_zero());
    CHECK(Rat(4, 2).is_integer());
}

TEST_CASE("rational parsing") {
    CHECK(Rat::parse("-1/2") == Rat(-1, 2));
    CHECK(Rat::parse("3") == Rat(3));
    CHECK(Rat::parse("6/4") == Rat(3, 2));
    CHECK_THROWS_AS(Rat::parse("abc"), input_error);
    CHECK_THROWS_AS(Rat::parse("1/2/3"), input_error);
    CHECK_THROWS_AS(Rat::parse(""), input_error);
}

TEST_CASE("overflow is detected, not wrapped") {
    Rat big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * big, std::overflow_error);
}

TEST_CASE("rational matrix inverse") {
    RatMat m = {{Rat(2), Rat(-1)}, {Rat(-1), Rat(2)}};
    RatMat inv = rat_inverse(m);
    CHECK(inv[0][0] == Rat(2, 3));
    CHECK(inv[0][1] == Rat(1, 3));
    RatMat sing = {{Rat(1), Rat(2)}, {Rat(2), Rat(4)}};
    CHECK_THROWS(rat_inverse(sing));
}
