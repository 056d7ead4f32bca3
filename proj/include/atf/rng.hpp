#pragma once

#include <cstdint>

namespace atf {

// SplitMix64 (Steele, Lea, Flood 2014). All randomness in the project flows
// through this generator so runs are bit-reproducible from a single seed.
// The three multiplier constants are the published ones.
inline constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += kSplitMixGamma;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next()
    {
        state_ += kSplitMixGamma;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 bits of mantissa.
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in [0, bound). Modulo bias is below 2^-32 for the tiny bounds
    // used here.
    std::uint32_t below(std::uint32_t bound)
    {
        return static_cast<std::uint32_t>(next() % bound);
    }

    // Independent substream for trial `index`; lets callers parallelize or
    // reorder trials without changing the draws inside each one.
    static Rng substream(std::uint64_t seed, std::uint64_t index)
    {
        return Rng(splitmix64(seed ^ splitmix64(index)));
    }

  private:
    std::uint64_t state_;
};

} // namespace atf
