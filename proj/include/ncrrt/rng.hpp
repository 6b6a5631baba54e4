// Portable pseudorandom stream.
//
// Algorithm: SplitMix64 (Steele, Lea & Flood; the generator behind Java's
// SplittableRandom). The state is a 64-bit counter advanced by the golden
// gamma 0x9E3779B97F4A7C15 per draw, and each output is a fixed bijective mix
// of the counter. Doubles use the top 53 bits: (next_u64() >> 11) * 2^-53,
// which lies in [0, 1). Integer arithmetic only, so sequences are
// bit-identical on every platform, and discard(n) is O(1).

#pragma once

#include <cstdint>

namespace ncrrt {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class RngStream {
public:
    explicit constexpr RngStream(std::uint64_t seed) noexcept : seed_(seed), state_(seed) {}

    [[nodiscard]] constexpr std::uint64_t seed() const noexcept { return seed_; }
    /// Number of 64-bit outputs drawn so far.
    [[nodiscard]] constexpr std::uint64_t position() const noexcept { return (state_ - seed_) * kInverseGamma; }

    constexpr std::uint64_t next_u64() noexcept {
        state_ += kGoldenGamma;
        return mix64(state_);
    }

    /// Uniform double in [0, 1).
    constexpr double uniform() noexcept { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// The uniform that the (ahead + 1)-th next call to uniform() would return.
    [[nodiscard]] constexpr double peek_uniform(std::uint64_t ahead) const noexcept {
        return static_cast<double>(mix64(state_ + (ahead + 1) * kGoldenGamma) >> 11) * 0x1.0p-53;
    }

    /// Skips `n` outputs, leaving the stream where n calls to next_u64() would.
    constexpr void discard(std::uint64_t n) noexcept { state_ += n * kGoldenGamma; }

    friend constexpr bool operator==(const RngStream&, const RngStream&) = default;

private:
    // Multiplicative inverse of the gamma modulo 2^64.
    static constexpr std::uint64_t kInverseGamma = [] {
        std::uint64_t inv = kGoldenGamma;  // Newton iteration, 5 rounds reach 64 bits
        for (int i = 0; i < 5; ++i) {
            inv *= 2 - kGoldenGamma * inv;
        }
        return inv;
    }();
    static_assert(kGoldenGamma * kInverseGamma == 1);

    std::uint64_t seed_;
    std::uint64_t state_;
};

}  // namespace ncrrt
