#include <doctest.h>

#include "fanopoly/bound.hpp"

using namespace fanopoly;

TEST_CASE("bracket values frozen from exact evaluation") {
    // n=6, I=2 (t = 3/2): [6/7 + (3/2)(729/64 - 1)] / (729/64) = 1637/1134
    CHECK(prop41_bracket(rat(2), 6) == rat(1637, 1134));
    CHECK(prop41_bracket(rat(2), 6) > 1);
    // n=6, I=10 (t = 11/10): 119410197/124009270 < 1
    CHECK(prop41_bracket(rat(10), 6) == rat(119410197, 124009270));
    CHECK(prop41_bracket(rat(10), 6) < 1);
}

TEST_CASE("the sign change for n=6 happens between 7 and 8") {
    CHECK(prop41_bracket(rat(7), 6) > 1);
    CHECK(prop41_bracket(rat(8), 6) < 1);
}

TEST_CASE("bracket input validation") {
    CHECK_THROWS_AS(prop41_bracket(rat(0), 6), input_error);
    CHECK_THROWS_AS(prop41_bracket(rat(-2), 6), input_error);
    CHECK_THROWS_AS(prop41_bracket(rat(5), 0), input_error);
}

TEST_CASE("bracket tends to n/(n+1) from above for large I") {
    Rational prev = prop41_bracket(rat(1000), 6);
    for (long I : {10000L, 100000L, 1000000L}) {
        Rational cur = prop41_bracket(rat(I), 6);
        CHECK(cur < prev);
        CHECK(cur > rat(6, 7));
        prev = cur;
    }
    CHECK(prev - rat(6, 7) < rat(1, 100000));
}

TEST_CASE("omega enclosure for n=6") {
    OmegaResult omega = omega_generic(6, rat(1, 1000000000));
    CHECK(omega.hi - omega.lo <= rat(1, 1000000000));
    CHECK(prop41_bracket(omega.lo, 6) > 1);
    CHECK(prop41_bracket(omega.hi, 6) < 1);
    // the root sits between 7.641146 and 7.641147
    CHECK(omega.lo > rat(7641146, 1000000));
    CHECK(omega.hi < rat(7641147, 1000000));
    CHECK(omega.rho_lo() == omega.lo / 2);
    // candidate labels are even integers: 6 is below the cutoff, 8 above
    CHECK(rat(6) < omega.lo);
    CHECK(rat(8) > omega.hi);
}

TEST_CASE("omega for n=1 encloses sqrt(2)") {
    OmegaResult omega = omega_generic(1, rat(1, 1000000));
    // lo < sqrt(2) < hi, checked exactly by squaring
    CHECK(omega.lo * omega.lo < 2);
    CHECK(omega.hi * omega.hi > 2);
}

TEST_CASE("omega input validation") {
    CHECK_THROWS_AS(omega_generic(6, rat(0)), input_error);
    CHECK_THROWS_AS(omega_generic(0, rat(1, 10)), input_error);
    // for huge n the root lies beyond the search range; fail loudly
    CHECK_THROWS_AS(omega_generic(5000, rat(1, 10)), input_error);
}

TEST_CASE("bracket is strictly decreasing on a fine grid past the root") {
    Rational prev = prop41_bracket(rat(8), 6);
    for (long k = 9; k <= 40; ++k) {
        Rational cur = prop41_bracket(rat(k), 6);
        CHECK(cur < prev);
        prev = cur;
    }
}
