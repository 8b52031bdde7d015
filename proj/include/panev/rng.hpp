#pragma once

#include <cstdint>

namespace panev {

/// splitmix64; fixed-width unsigned arithmetic only, so streams are identical
/// across platforms and toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {
        next();
        next();
    }

    /// Trial streams are independent of execution order: trial k always sees
    /// the same stream no matter how many trials run or on how many threads.
    static Rng for_trial(std::uint64_t seed, std::uint64_t trial) {
        return Rng(seed ^ (0x9E3779B97F4A7C15ULL * (trial + 1)));
    }

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform on [lo, hi], inclusive, unbiased via rejection.
    long uniform(long lo, long hi) {
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return lo + static_cast<long>(x % span);
    }

    bool chance(unsigned numerator, unsigned denominator) {
        return next() % denominator < numerator;
    }

private:
    std::uint64_t state_;
};

} // namespace panev
