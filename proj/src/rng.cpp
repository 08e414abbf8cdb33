#include "symbern/rng.hpp"

#include <cmath>

namespace symbern {

double Stream::exponential(double mean) { return -mean * std::log1p(-uniform01()); }

std::uint64_t Stream::below(std::uint64_t n) {
    const std::uint64_t limit = max() - max() % n;
    std::uint64_t x;
    do {
        x = (*this)();
    } while (x >= limit);
    return x % n;
}

}  // namespace symbern
