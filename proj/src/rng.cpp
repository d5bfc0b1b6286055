#include "seqlof/rng.hpp"

#include <cmath>
#include <numbers>

namespace seqlof {

namespace {

constexpr std::uint32_t kWeylA = 0x9E3779B9u;
constexpr std::uint32_t kWeylB = 0xBB67AE85u;
constexpr std::uint32_t kMulA = 0xD2511F53u;
constexpr std::uint32_t kMulB = 0xCD9E8D57u;

inline void mul_hi_lo(std::uint32_t a, std::uint32_t b, std::uint32_t& lo, std::uint32_t& hi) {
    std::uint64_t product = static_cast<std::uint64_t>(a) * b;
    lo = static_cast<std::uint32_t>(product);
    hi = static_cast<std::uint32_t>(product >> 32);
}

inline void philox_round(std::uint32_t ctr[4], const std::uint32_t key[2]) {
    std::uint32_t lo0, hi0, lo1, hi1;
    mul_hi_lo(kMulA, ctr[0], lo0, hi0);
    mul_hi_lo(kMulB, ctr[2], lo1, hi1);
    std::uint32_t out0 = hi1 ^ ctr[1] ^ key[0];
    std::uint32_t out1 = lo1;
    std::uint32_t out2 = hi0 ^ ctr[3] ^ key[1];
    std::uint32_t out3 = lo0;
    ctr[0] = out0;
    ctr[1] = out1;
    ctr[2] = out2;
    ctr[3] = out3;
}

} // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream_index)
    : block_pos_(4), cached_normal_(0.0), has_cached_normal_(false) {
    key_[0] = static_cast<std::uint32_t>(seed);
    key_[1] = static_cast<std::uint32_t>(seed >> 32);
    counter_[0] = static_cast<std::uint32_t>(stream_index);
    counter_[1] = static_cast<std::uint32_t>(stream_index >> 32);
    counter_[2] = 0;
    counter_[3] = 0;
}

void RngStream::refill() {
    std::uint32_t ctr[4] = {counter_[0], counter_[1], counter_[2], counter_[3]};
    std::uint32_t key[2] = {key_[0], key_[1]};
    for (int round = 0; round < 10; ++round) {
        philox_round(ctr, key);
        if (round != 9) {
            key[0] += kWeylA;
            key[1] += kWeylB;
        }
    }
    block_[0] = ctr[0];
    block_[1] = ctr[1];
    block_[2] = ctr[2];
    block_[3] = ctr[3];
    block_pos_ = 0;
    // Advance the per-stream block counter; the stream id words stay fixed.
    if (++counter_[2] == 0) {
        ++counter_[3];
    }
}

std::uint32_t RngStream::next_u32() {
    if (block_pos_ == 4) {
        refill();
    }
    return block_[block_pos_++];
}

std::uint64_t RngStream::next_u64() {
    std::uint64_t lo = next_u32();
    std::uint64_t hi = next_u32();
    return (hi << 32) | lo;
}

double RngStream::next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    // u1 in (0,1] keeps the log finite.
    double u1 = (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    double u2 = next_uniform();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * std::numbers::pi * u2;
    cached_normal_ = radius * std::sin(angle);
    has_cached_normal_ = true;
    return radius * std::cos(angle);
}

double RngStream::next_uniform_unit_variance() {
    static const double sqrt3 = std::sqrt(3.0);
    return (2.0 * next_uniform() - 1.0) * sqrt3;
}

} // namespace seqlof
