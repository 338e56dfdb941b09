#pragma once

#include <cstdint>

namespace fwsil {

// Counter-based uniform generator (splitmix64 finalizer over a hashed
// (seed, stream, counter) tuple). Every draw is a pure function of its
// coordinates, so sample i of stream s is the same no matter how many
// draws happened before it or on which thread it is evaluated. This is what
// makes offline sampling and Monte Carlo campaigns bit-reproducible.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    /// Raw 64-bit word for (stream, counter).
    std::uint64_t word(std::uint64_t stream, std::uint64_t counter) const {
        std::uint64_t z = seed_;
        z = mix(z ^ (stream * 0x9E3779B97F4A7C15ULL));
        z = mix(z ^ (counter * 0xBF58476D1CE4E5B9ULL));
        return mix(z);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01(std::uint64_t stream, std::uint64_t counter) const {
        return static_cast<double>(word(stream, counter) >> 11) * 0x1.0p-53;
    }

    /// Uniform double in [lo, hi).
    double uniform(std::uint64_t stream, std::uint64_t counter, double lo,
                   double hi) const {
        return lo + (hi - lo) * uniform01(stream, counter);
    }

    /// Symmetric uniform in [-b, b).
    double uniform_sym(std::uint64_t stream, std::uint64_t counter,
                       double b) const {
        return uniform(stream, counter, -b, b);
    }

    /// Derive a child seed, e.g. one per Monte Carlo run.
    std::uint64_t substream_seed(std::uint64_t stream,
                                 std::uint64_t index) const {
        return word(stream, index);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
};

// Stream ids. Keeping them centralized avoids accidental stream collisions
// between the offline stage and the simulation harness.
namespace rng_stream {
inline constexpr std::uint64_t kStateSamples = 1;
inline constexpr std::uint64_t kInputSamples = 2;
inline constexpr std::uint64_t kTerminalSamples = 3;
inline constexpr std::uint64_t kCostSamples = 4;
inline constexpr std::uint64_t kGainVerification = 5;
inline constexpr std::uint64_t kMonteCarloRun = 6;
inline constexpr std::uint64_t kEpisodeUncertainty = 7;
inline constexpr std::uint64_t kEpisodeNoise = 8;
inline constexpr std::uint64_t kEpisodeWind = 9;
}  // namespace rng_stream

}  // namespace fwsil
