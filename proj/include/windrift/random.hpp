#pragma once

// Counter-based random streams. Every random number is a pure function of
// (master seed, stream id, purpose, draw index) through Philox4x32-10, so a
// walker's noise does not depend on how work is scheduled across threads.
//
// Stream layout: key = master seed (64 bits); counter words 0-1 hold the draw
// index, word 2 the walker index, word 3 the replica index (low 28 bits) with
// the purpose tag in the top 4 bits.

#include <Eigen/Core>

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

namespace windrift {

class Philox4x32 {
public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Counter generate(Counter ctr, Key key)
    {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += kW0;
                key[1] += kW1;
            }
            const std::uint64_t p0 = std::uint64_t{kM0} * ctr[0];
            const std::uint64_t p1 = std::uint64_t{kM1} * ctr[2];
            ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
                   static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
        }
        return ctr;
    }

private:
    static constexpr std::uint32_t kM0 = 0xD2511F53;
    static constexpr std::uint32_t kM1 = 0xCD9E8D57;
    static constexpr std::uint32_t kW0 = 0x9E3779B9;
    static constexpr std::uint32_t kW1 = 0xBB67AE85;
};

enum class StreamPurpose : std::uint32_t {
    Dynamics = 0,
    InitialState = 1,
    Population = 2,
    Synthetic = 3,
};

/// A private random stream. Copyable; copies replay the same numbers.
class RandomStream {
public:
    RandomStream(std::uint64_t master_seed, std::uint32_t replica, std::uint32_t walker,
                 StreamPurpose purpose = StreamPurpose::Dynamics)
        : key_{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32)},
          walker_(walker),
          tagged_replica_((replica & 0x0FFFFFFFu) | (static_cast<std::uint32_t>(purpose) << 28))
    {
    }

    /// Raw 128-bit block number `index`.
    Philox4x32::Counter block(std::uint64_t index) const
    {
        return Philox4x32::generate({static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32),
                                     walker_, tagged_replica_},
                                    key_);
    }

    /// Two uniforms in (0, 1) with 53-bit resolution from block `index`.
    std::array<double, 2> uniform2(std::uint64_t index) const
    {
        const auto b = block(index);
        return {to_open_unit(b[0], b[1]), to_open_unit(b[2], b[3])};
    }

    /// Two independent standard normals from block `index` (Box-Muller).
    std::array<double, 2> normal2(std::uint64_t index) const
    {
        const auto [u1, u2] = uniform2(index);
        const double radius = std::sqrt(-2 * std::log(u1));
        const double angle = 2 * 3.14159265358979323846 * u2;
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

    /// Four standard normals for draw `index` (uses blocks 2*index, 2*index+1).
    Eigen::Vector4d normal4(std::uint64_t index) const
    {
        const auto a = normal2(2 * index);
        const auto b = normal2(2 * index + 1);
        return {a[0], a[1], b[0], b[1]};
    }

private:
    static double to_open_unit(std::uint32_t lo, std::uint32_t hi)
    {
        const std::uint64_t bits = ((std::uint64_t{hi} << 32) | lo) >> 11;
        return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
    }

    Philox4x32::Key key_;
    std::uint32_t walker_;
    std::uint32_t tagged_replica_;
};

/// Sequential UniformRandomBitGenerator view of a stream, for std distributions.
class StreamEngine {
public:
    using result_type = std::uint32_t;

    explicit StreamEngine(RandomStream stream) : stream_(stream) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()()
    {
        if (lane_ == 4) {
            buffer_ = stream_.block(next_block_++);
            lane_ = 0;
        }
        return buffer_[lane_++];
    }

private:
    RandomStream stream_;
    Philox4x32::Counter buffer_{};
    std::uint64_t next_block_ = 0;
    int lane_ = 4;
};

}  // namespace windrift
