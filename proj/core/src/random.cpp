#include "ridgekit/random.hpp"

#include <cmath>
#include <stdexcept>

namespace ridgekit {

namespace {

constexpr std::uint32_t kPhiloxM0 = 0xD2511F53u;
constexpr std::uint32_t kPhiloxM1 = 0xCD9E8D57u;
constexpr std::uint32_t kPhiloxW0 = 0x9E3779B9u;
constexpr std::uint32_t kPhiloxW1 = 0xBB67AE85u;

inline void mulhilo(std::uint32_t a, std::uint32_t b, std::uint32_t& hi,
                    std::uint32_t& lo) {
    const std::uint64_t product = std::uint64_t{a} * b;
    hi = static_cast<std::uint32_t>(product >> 32);
    lo = static_cast<std::uint32_t>(product);
}

constexpr double kTwoPow53Inv = 1.0 / 9007199254740992.0;  // 2^-53
constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kInvSqrt2Pi = 0.39894228040143267794;

inline double to_unit_interval(std::uint64_t word) {
    return (static_cast<double>(word >> 11) + 0.5) * kTwoPow53Inv;
}

}  // namespace

std::array<std::uint32_t, 4> RandomStream::philox4x32(
    const std::array<std::uint32_t, 4>& counter,
    const std::array<std::uint32_t, 2>& key) {
    std::array<std::uint32_t, 4> x = counter;
    std::array<std::uint32_t, 2> k = key;
    for (int round = 0; round < 10; ++round) {
        std::uint32_t hi0, lo0, hi1, lo1;
        mulhilo(kPhiloxM0, x[0], hi0, lo0);
        mulhilo(kPhiloxM1, x[2], hi1, lo1);
        x = {hi1 ^ x[1] ^ k[0], lo1, hi0 ^ x[3] ^ k[1], lo0};
        k[0] += kPhiloxW0;
        k[1] += kPhiloxW1;
    }
    return x;
}

double RandomStream::next_uniform() {
    const std::uint64_t block = position_ / 2;
    const std::uint64_t slot = position_ % 2;
    if (block != cached_block_) {
        const std::array<std::uint32_t, 4> counter = {
            static_cast<std::uint32_t>(block),
            static_cast<std::uint32_t>(block >> 32),
            static_cast<std::uint32_t>(stream_id_),
            static_cast<std::uint32_t>(stream_id_ >> 32)};
        const std::array<std::uint32_t, 2> key = {
            static_cast<std::uint32_t>(seed_),
            static_cast<std::uint32_t>(seed_ >> 32)};
        const auto out = philox4x32(counter, key);
        cached_words_[0] = out[0] | (std::uint64_t{out[1]} << 32);
        cached_words_[1] = out[2] | (std::uint64_t{out[3]} << 32);
        cached_block_ = block;
    }
    ++position_;
    return to_unit_interval(cached_words_[slot]);
}

double RandomStream::next_normal() { return normal_quantile(next_uniform()); }

std::vector<double> standard_normal(RandomStream& stream, std::size_t count) {
    if (count < 1) {
        throw std::invalid_argument("standard_normal: count must be at least 1");
    }
    std::vector<double> draws(count);
    for (std::size_t i = 0; i < count; ++i) {
        draws[i] = stream.next_normal();
    }
    return draws;
}

double normal_quantile(double u) {
    if (!(u > 0.0) || !(u < 1.0)) {
        throw std::invalid_argument("normal_quantile: u must lie in (0,1)");
    }
    // Rational tail approximation (Abramowitz & Stegun 26.2.22), |err| < 3e-3.
    const double tail = u < 0.5 ? u : 1.0 - u;
    const double t = std::sqrt(-2.0 * std::log(tail));
    double x = t - (2.30753 + 0.27061 * t) / (1.0 + t * (0.99229 + 0.04481 * t));
    if (u < 0.5) x = -x;
    // Three Newton steps on Phi(x) - u reach full double precision.
    for (int i = 0; i < 3; ++i) {
        const double err = 0.5 * std::erfc(-x * kInvSqrt2) - u;
        const double pdf = kInvSqrt2Pi * std::exp(-0.5 * x * x);
        x -= err / pdf;
    }
    return x;
}

}  // namespace ridgekit
