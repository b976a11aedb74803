#pragma once

#include <cstdint>
#include <limits>

namespace roma {

/// SplitMix64. Counter based: the k-th output is mix(seed + k * golden_gamma), so a
/// stream is fully described by its seed and position.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    static constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ULL;

    explicit SplitMix64(std::uint64_t seed = 0) noexcept : state_(seed) {}

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept {
        state_ += golden_gamma;
        return mix(state_);
    }

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

using Rng = SplitMix64;

/// Seed of sub-stream `index` of `master`. Distinct (master, index) pairs give
/// unrelated streams; used to give every trial of a sweep its own generator.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
    return SplitMix64::mix(master ^ SplitMix64::mix(index + SplitMix64::golden_gamma));
}

}  // namespace roma
