#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <utility>

namespace fatequator {

// splitmix64 finalizer (Vigna; Steele/Lea/Flood splittable-generator family).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

// Counter-based generator: output i of seed s is mix64(s + (i+1)*gamma),
// so the whole sequence is a pure function of the seed.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next_u64() noexcept {
        state_ += kGoldenGamma;
        return mix64(state_);
    }

    // Uniform on [0, 1), 53 bits.
    double next_double() noexcept {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform on (0, 1]; safe as a log argument.
    double next_double_pos() noexcept {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

private:
    std::uint64_t state_;
};

// Names one logical random stream as (root_seed, stream_index). Sub-stream
// derivation is the pure mixing function leaf_seed(), so partitioned work
// reproduces bit-identically for any worker count.
struct SeedStream {
    std::uint64_t root_seed = 0;
    std::uint64_t stream_index = 0;

    // Mixing function (root, index) -> generator seed.
    constexpr std::uint64_t leaf_seed() const noexcept {
        return mix64(root_seed + kGoldenGamma * (stream_index + 1));
    }

    constexpr SeedStream child(std::uint64_t index) const noexcept {
        return SeedStream{leaf_seed(), index};
    }

    constexpr SplitMix64 generator() const noexcept { return SplitMix64(leaf_seed()); }

    friend constexpr bool operator==(const SeedStream&, const SeedStream&) = default;
};

// One Box-Muller pair. Consumes exactly two uniforms whatever the values
// drawn, so stream consumption never depends on the data (no rejection).
inline std::pair<double, double> gaussian_pair(SplitMix64& gen) noexcept {
    const double u1 = gen.next_double_pos();
    const double u2 = gen.next_double();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(theta), r * std::sin(theta)};
}

// Fills out with independent standard normals; consumes 2*ceil(out.size()/2)
// uniforms.
inline void fill_gaussian(SplitMix64& gen, std::span<double> out) noexcept {
    std::size_t i = 0;
    while (i + 2 <= out.size()) {
        const auto [z0, z1] = gaussian_pair(gen);
        out[i] = z0;
        out[i + 1] = z1;
        i += 2;
    }
    if (i < out.size()) out[i] = gaussian_pair(gen).first;
}

}  // namespace fatequator
