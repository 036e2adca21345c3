#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quiver/bigint.hpp"

#include <cstdint>

using quiver::Integer;

TEST_CASE("small values round-trip") {
    CHECK(Integer(0).to_string() == "0");
    CHECK(Integer(1).to_string() == "1");
    CHECK(Integer(-1).to_string() == "-1");
    CHECK(Integer(1000000000LL).to_string() == "1000000000");
    CHECK(Integer(-123456789012345678LL).to_string() == "-123456789012345678");
    CHECK(Integer(42).to_long_long() == 42);
    CHECK(Integer(-9007199254740993LL).to_long_long() == -9007199254740993LL);
}

TEST_CASE("ring operations agree with 64-bit arithmetic") {
    // deterministic pseudo-random pairs that stay within long long
    std::uint64_t state = 12345;
    auto next = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return static_cast<long long>(state >> 33) - (1LL << 30);
    };
    for (int t = 0; t < 2000; ++t) {
        long long a = next(), b = next();
        CHECK((Integer(a) + Integer(b)).to_long_long() == a + b);
        CHECK((Integer(a) - Integer(b)).to_long_long() == a - b);
        CHECK((Integer(a) * Integer(b)).to_long_long() == a * b);
        CHECK((Integer(a) == Integer(b)) == (a == b));
        CHECK((Integer(a) < Integer(b)) == (a < b));
    }
}

TEST_CASE("large products") {
    Integer big = 1;
    for (int i = 1; i <= 30; ++i) big *= Integer(i);
    CHECK(big.to_string() == "265252859812191058636308480000000");  // 30!
    CHECK((big - big).is_zero());
    CHECK((big * Integer(-1) + big).is_zero());
    CHECK(quiver::pow(Integer(10), 30).to_string() == "1" + std::string(30, '0'));
}

TEST_CASE("sign handling") {
    Integer a = -5, b = 3;
    CHECK((a * b).to_long_long() == -15);
    CHECK((a * a).to_long_long() == 25);
    CHECK((a + b).to_long_long() == -2);
    CHECK((b - a).to_long_long() == 8);
    CHECK(a.sign() == -1);
    CHECK(Integer().sign() == 0);
}
