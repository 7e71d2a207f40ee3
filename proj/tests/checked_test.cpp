#include <catch2/catch_amalgamated.hpp>

#include <limits>

#include "pentuniv/checked.hpp"

using namespace pentuniv;

namespace {
constexpr i64 kMax = std::numeric_limits<i64>::max();
constexpr i64 kMin = std::numeric_limits<i64>::min();
}  // namespace

TEST_CASE("checked arithmetic agrees with plain arithmetic in range") {
    CHECK(checked_add(2, 3) == 5);
    CHECK(checked_add(-7, 7) == 0);
    CHECK(checked_sub(2, 9) == -7);
    CHECK(checked_mul(-4, 6) == -24);
    CHECK(checked_mul(0, kMax) == 0);
    CHECK(checked_neg(5) == -5);
    CHECK(checked_neg(kMax) == kMin + 1);
}

TEST_CASE("checked arithmetic throws instead of wrapping") {
    CHECK_THROWS_AS(checked_add(kMax, 1), std::overflow_error);
    CHECK_THROWS_AS(checked_add(kMin, -1), std::overflow_error);
    CHECK_THROWS_AS(checked_sub(kMin, 1), std::overflow_error);
    CHECK_THROWS_AS(checked_mul(kMax / 2 + 1, 2), std::overflow_error);
    CHECK_THROWS_AS(checked_mul(kMin, -1), std::overflow_error);
    CHECK_THROWS_AS(checked_neg(kMin), std::overflow_error);
}

TEST_CASE("checked_pow") {
    CHECK(checked_pow(7, 0) == 1);
    CHECK(checked_pow(7, 1) == 7);
    CHECK(checked_pow(7, 4) == 2401);
    CHECK(checked_pow(2, 62) == i64{1} << 62);
    CHECK(checked_pow(-3, 3) == -27);
    CHECK_THROWS_AS(checked_pow(2, 63), std::overflow_error);
    CHECK_THROWS_AS(checked_pow(10, 19), std::overflow_error);
}

TEST_CASE("isqrt on small values and around perfect squares") {
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(1) == 1);
    CHECK(isqrt(2) == 1);
    CHECK(isqrt(3) == 1);
    CHECK(isqrt(4) == 2);
    CHECK(isqrt(8) == 2);
    CHECK(isqrt(9) == 3);
    for (i64 r : {i64{5}, i64{12}, i64{1000}, i64{65536}, i64{123456789}}) {
        CHECK(isqrt(r * r - 1) == r - 1);
        CHECK(isqrt(r * r) == r);
        CHECK(isqrt(r * r + 1) == r);
    }
    CHECK_THROWS_AS(isqrt(-1), std::domain_error);
}

TEST_CASE("isqrt near the top of the range") {
    // floor(sqrt(2^63 - 1)) = 3037000499; squaring the next integer would
    // overflow, which is exactly the region the guard has to handle.
    constexpr i64 r = 3037000499;
    CHECK(isqrt(kMax) == r);
    CHECK(isqrt(r * r) == r);
    CHECK(isqrt(r * r - 1) == r - 1);
    CHECK(isqrt(r * r + 1) == r);
}

TEST_CASE("is_square") {
    CHECK(is_square(0));
    CHECK(is_square(1));
    CHECK(is_square(49));
    CHECK(is_square(3037000499LL * 3037000499LL));
    CHECK_FALSE(is_square(2));
    CHECK_FALSE(is_square(48));
    CHECK_FALSE(is_square(-4));
    CHECK_FALSE(is_square(kMax));
}
