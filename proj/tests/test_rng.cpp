#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <vector>

#include "seqlof/rng.hpp"

using namespace seqlof;

// Reference words generated with an independent Philox4x32-10
// implementation; the all-zero case is the published known-answer vector.
TEST_CASE("philox known-answer blocks") {
    {
        RngStream stream(0, 0);
        CHECK(stream.next_u32() == 0x6627e8d5u);
        CHECK(stream.next_u32() == 0xe169c58du);
        CHECK(stream.next_u32() == 0xbc57ac4cu);
        CHECK(stream.next_u32() == 0x9b00dbd8u);
    }
    {
        RngStream stream(42, 7);
        CHECK(stream.next_u32() == 0x5bbd83b1u);
        CHECK(stream.next_u32() == 0x68784c85u);
        CHECK(stream.next_u32() == 0x172067aau);
        CHECK(stream.next_u32() == 0x2e6b75b7u);
        // second block of the same stream
        CHECK(stream.next_u32() == 0x4c78c45fu);
        CHECK(stream.next_u32() == 0x5281c34eu);
        CHECK(stream.next_u32() == 0x1a41a83bu);
        CHECK(stream.next_u32() == 0xaed20ef5u);
    }
    {
        RngStream stream(0x01234567deadbeefULL, 0x7f4a7c159e3779b9ULL);
        CHECK(stream.next_u32() == 0x20af7641u);
        CHECK(stream.next_u32() == 0x5a409e93u);
        CHECK(stream.next_u32() == 0x7970e624u);
        CHECK(stream.next_u32() == 0x83617838u);
    }
}

TEST_CASE("streams are deterministic and distinct") {
    RngStream a(123, 5);
    RngStream b(123, 5);
    RngStream c(123, 6);
    RngStream d(124, 5);
    bool same_ab = true;
    bool same_ac = true;
    bool same_ad = true;
    for (int i = 0; i < 256; ++i) {
        std::uint64_t word = a.next_u64();
        same_ab = same_ab && word == b.next_u64();
        same_ac = same_ac && word == c.next_u64();
        same_ad = same_ad && word == d.next_u64();
    }
    CHECK(same_ab);
    CHECK_FALSE(same_ac);
    CHECK_FALSE(same_ad);
}

TEST_CASE("uniform draws have the right range and moments") {
    RngStream stream(2024, 0);
    const int n = 200000;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        double u = stream.next_uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        sum += u;
        sum_sq += u * u;
    }
    double mean = sum / n;
    double variance = sum_sq / n - mean * mean;
    CHECK(std::abs(mean - 0.5) < 0.003);
    CHECK(std::abs(variance - 1.0 / 12.0) < 0.002);
}

TEST_CASE("normal draws have standard moments") {
    RngStream stream(2024, 1);
    const int n = 200000;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int i = 0; i < n; ++i) {
        double x = stream.next_normal();
        sum += x;
        sum_sq += x * x;
    }
    double mean = sum / n;
    double variance = sum_sq / n - mean * mean;
    CHECK(std::abs(mean) < 3.0 / std::sqrt(static_cast<double>(n)));
    CHECK(variance > 0.97);
    CHECK(variance < 1.03);
}

TEST_CASE("unit-variance uniform law") {
    RngStream stream(2024, 2);
    const int n = 200000;
    double sum = 0.0;
    double sum_sq = 0.0;
    double bound = std::sqrt(3.0);
    for (int i = 0; i < n; ++i) {
        double x = stream.next_uniform_unit_variance();
        REQUIRE(std::abs(x) <= bound);
        sum += x;
        sum_sq += x * x;
    }
    double mean = sum / n;
    CHECK(std::abs(mean) < 0.01);
    CHECK(std::abs(sum_sq / n - mean * mean - 1.0) < 0.01);
}
