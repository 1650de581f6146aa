#include <doctest.h>

#include "qrdw/dyadic.hpp"

using namespace qrdw;

TEST_SUITE("dyadic") {

    TEST_CASE("canonical form strips twos into the exponent") {
        const auto v = DyadicValue::from_integer(12); // 3 * 2^2
        CHECK(v.mantissa() == 3);
        CHECK(v.exponent() == 2);

        const auto w = DyadicValue::from_ratio_pow2(4, 3); // 4/8 = 1/2
        CHECK(w.mantissa() == 1);
        CHECK(w.exponent() == -1);

        CHECK(DyadicValue::from_integer(0) == DyadicValue::zero());
        CHECK(DyadicValue::from_ratio_pow2(0, 5) == DyadicValue::zero());
        CHECK(DyadicValue::zero().exponent() == 0);
    }

    TEST_CASE("equality is exact") {
        CHECK(DyadicValue::from_ratio_pow2(2, 2) == DyadicValue::from_ratio_pow2(1, 1));
        CHECK(DyadicValue::pow2(2) == DyadicValue::from_integer(4));
        CHECK(DyadicValue::pow2(0) == DyadicValue::from_integer(1));
        CHECK_FALSE(DyadicValue::pow2(-1) == DyadicValue::zero());
        CHECK_FALSE(DyadicValue::from_integer(2) == DyadicValue::from_integer(-2));
    }

    TEST_CASE("rendering") {
        CHECK(DyadicValue::zero().to_string() == "0");
        CHECK(DyadicValue::from_integer(4).to_string() == "4");
        CHECK(DyadicValue::pow2(-1).to_string() == "1/2");
        CHECK(DyadicValue::pow2(-3).to_string() == "1/8");
        CHECK(DyadicValue::from_ratio_pow2(3, 3).to_string() == "3/8");
        CHECK(DyadicValue::from_integer(-6).to_string() == "-6");
        CHECK(DyadicValue::pow2(80).to_string() == "1*2^80");
        CHECK(DyadicValue::pow2(-80).to_string() == "1/2^80");
    }

    TEST_CASE("negative values canonicalize too") {
        const auto v = DyadicValue::from_ratio_pow2(-12, 1); // -6 = -3 * 2
        CHECK(v.mantissa() == -3);
        CHECK(v.exponent() == 1);
    }
}
