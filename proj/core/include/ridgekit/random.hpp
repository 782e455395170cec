#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace ridgekit {

/// Deterministic, splittable source of standard-normal variates.
///
/// The generator is Philox4x32-10, a counter-based block cipher: the 64-bit
/// seed is the key, and each 128-bit counter block is (block_index, stream_id).
/// Streams with distinct stream_id values therefore consume provably disjoint
/// counter ranges of the same keyed cipher, so any substream can be created
/// and consumed independently of every other, in any order, on any thread.
///
/// Every block yields two 64-bit words; each word maps to a uniform in (0,1)
/// via u = ((w >> 11) + 0.5) * 2^-53, and each uniform maps to one normal by
/// inversion of the standard normal CDF (rational initial guess refined with
/// three Newton steps on erfc). The transform is fixed: draw i of a stream is
/// a pure function of (seed, stream_id, i).
class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t stream_id) noexcept
        : seed_(seed), stream_id_(stream_id) {}

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t stream_id() const noexcept { return stream_id_; }

    /// Number of variates consumed so far.
    std::uint64_t position() const noexcept { return position_; }

    /// Next uniform in the open interval (0,1).
    double next_uniform();

    /// Next standard-normal variate.
    double next_normal();

    /// Advance as if `count` variates had been drawn.
    void skip(std::uint64_t count) noexcept { position_ += count; }

    /// Raw Philox4x32-10 block, exposed for known-answer tests.
    static std::array<std::uint32_t, 4> philox4x32(
        const std::array<std::uint32_t, 4>& counter,
        const std::array<std::uint32_t, 2>& key);

private:
    std::uint64_t seed_;
    std::uint64_t stream_id_;
    std::uint64_t position_ = 0;
    std::uint64_t cached_block_ = ~std::uint64_t{0};
    std::array<std::uint64_t, 2> cached_words_{};
};

/// Draws `count` independent N(0,1) variates from `stream`, advancing it.
/// count must be at least 1.
std::vector<double> standard_normal(RandomStream& stream, std::size_t count);

/// Inverse of the standard normal CDF for u in (0,1).
double normal_quantile(double u);

/// SplitMix64 finalizer; the project's standard 64-bit mixing function.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

}  // namespace ridgekit
