#pragma once

#include <cstdint>
#include <limits>

namespace symbern {

/**
 * Reproducible random streams.
 *
 * Every Monte Carlo draw i of a run with seed s reads from its own stream,
 * a SplitMix64 generator started at substream_seed(s, i). Draws therefore
 * do not depend on evaluation order or thread count, and all conversions
 * to doubles are done here with fixed formulas (no std:: distributions,
 * whose output is implementation-defined).
 */
class Stream {
public:
    using result_type = std::uint64_t;

    explicit Stream(std::uint64_t state) : state_(state) {}
    Stream(std::uint64_t seed, std::uint64_t index) : state_(substream_seed(seed, index)) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        return mix(z);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }
    /// Exponential with the given mean, by inversion.
    double exponential(double mean);
    /// Uniform integer in [0, n), n > 0, unbiased.
    std::uint64_t below(std::uint64_t n);
    /// Uniform integer in [lo, hi].
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

    static std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
        return mix(seed ^ mix(index + 0x632BE59BD9B4E019ull));
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace symbern
