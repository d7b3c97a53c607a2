// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string_view>

namespace hardness {

// SplitMix64 (Steele, Lea & Flood 2014) used as a counter-based generator:
// draw k of a stream keyed by `key` is mix(key + (k + 1) * 0x9E3779B97F4A7C15).
// Streams are split by hashing (seed, stream id) into a fresh key, so any
// implementation of mix64 reproduces every draw.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    static constexpr std::string_view name = "splitmix64";
    static constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ULL;

    explicit SplitMix64(std::uint64_t key) noexcept : state_(key) {}

    static constexpr std::uint64_t mix64(std::uint64_t z) noexcept
    {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~std::uint64_t{0}; }

    result_type operator()() noexcept
    {
        state_ += golden_gamma;
        return mix64(state_);
    }

    // 53-bit uniform in [0, 1).
    double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, bound) by rejection (no modulo bias).
    std::uint64_t below(std::uint64_t bound) noexcept;

private:
    std::uint64_t state_;
};

// Key for sub-stream `stream` of `seed`.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept
{
    return SplitMix64::mix64(SplitMix64::mix64(seed + SplitMix64::golden_gamma) ^ (stream * 0xD1B54A32D192ED03ULL + 1));
}

// Standard normal draws by the Marsaglia polar method. Each accepted pair
// (u, v) yields u*f first and v*f on the next call.
class NormalSampler {
public:
    double operator()(SplitMix64& rng) noexcept;

private:
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace hardness
