#include <doctest.h>

#include <cmath>
#include <cstdint>

#include "motzgen/numbers.hpp"
#include "motzgen/rng.hpp"

using namespace motzgen;

TEST_CASE("equal seeds give equal interleaved sequences") {
    RandomStream a(12345), b(12345);
    for (int i = 0; i < 1000; ++i) {
        CHECK(a.next_below(std::uint64_t{97}) == b.next_below(std::uint64_t{97}));
        CHECK(a.next_unit() == b.next_unit());
        CHECK(a.next_below(BigCount("123456789012345678901234567890")) ==
              b.next_below(BigCount("123456789012345678901234567890")));
    }
}

TEST_CASE("next_below edge cases") {
    RandomStream s(1);
    CHECK_THROWS_AS(s.next_below(std::uint64_t{0}), std::invalid_argument);
    CHECK_THROWS_AS(s.next_below(BigCount(0)), std::invalid_argument);
    for (int i = 0; i < 10; ++i) CHECK(s.next_below(std::uint64_t{1}) == 0);
    CHECK(s.next_below(BigCount(1)) == 0);
}

TEST_CASE("next_below(2) is a fair coin") {
    RandomStream s(42);
    const std::uint64_t n = 1000000;
    std::uint64_t ones = 0;
    for (std::uint64_t i = 0; i < n; ++i) ones += s.next_below(std::uint64_t{2});
    const double sigma = std::sqrt(n * 0.25);
    CHECK(std::abs(static_cast<double>(ones) - n / 2.0) <= 5 * sigma);
}

TEST_CASE("next_below is unbiased for every bound up to 64") {
    const std::uint64_t n = 1000000;
    for (std::uint64_t bound = 2; bound <= 64; ++bound) {
        RandomStream s(bound);
        std::vector<std::uint64_t> counts(bound, 0);
        for (std::uint64_t i = 0; i < n; ++i) ++counts[s.next_below(bound)];
        const double p = 1.0 / static_cast<double>(bound);
        const double sigma = std::sqrt(n * p * (1 - p));
        for (std::uint64_t v = 0; v < bound; ++v)
            CHECK(std::abs(static_cast<double>(counts[v]) - n * p) <= 5 * sigma);
    }
}

TEST_CASE("big-integer bounds stay in range") {
    RandomStream s(7);
    const BigCount bound = BigCount(32) * motzkin(30);  // (n+2) M_n at n = 30
    for (int i = 0; i < 10000; ++i) {
        const BigCount v = s.next_below(bound);
        CHECK(v >= 0);
        CHECK(v < bound);
    }
    // a bound wide enough to need several words
    const BigCount wide = (BigCount(1) << 200) + 12345;
    for (int i = 0; i < 1000; ++i) {
        const BigCount v = s.next_below(wide);
        CHECK(v >= 0);
        CHECK(v < wide);
    }
}

TEST_CASE("next_unit range, granularity and mean") {
    RandomStream s(99);
    double sum = 0;
    const int n = 1000000;
    for (int i = 0; i < n; ++i) {
        const double u = s.next_unit();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        const double scaled = std::ldexp(u, 53);
        CHECK(scaled == std::floor(scaled));  // exactly 53 random bits
        sum += u;
    }
    CHECK(std::abs(sum / n - 0.5) < 0.002);
}
