#pragma once

#include <cstdint>

namespace seqlof {

// Counter-based Philox4x32-10 keyed substream (Salmon et al., SC 2011).
//
// A stream is addressed by (seed, stream_index): the 64-bit seed is the
// Philox key and the stream index occupies the low counter words, so every
// replication of a Monte Carlo run owns an independent stream whose output
// depends only on those two numbers, never on scheduling. Each stream can
// emit 2^64 blocks of four 32-bit words.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t stream_index);

    std::uint32_t next_u32();
    std::uint64_t next_u64();

    // Uniform on [0,1), 53-bit resolution.
    double next_uniform();

    // Standard normal via Box-Muller on the raw bits; the spare value is
    // cached, so draws stay deterministic per stream.
    double next_normal();

    // Mean-zero, unit-variance draw under the configured-by-caller law:
    // uniform on (-sqrt(3), sqrt(3)).
    double next_uniform_unit_variance();

private:
    void refill();

    std::uint32_t key_[2];
    std::uint32_t counter_[4];
    std::uint32_t block_[4];
    int block_pos_;
    double cached_normal_;
    bool has_cached_normal_;
};

} // namespace seqlof
