#pragma once

#include <cstdint>

namespace sympel {

/// SplitMix64 stream. Used for test-input synthesis; output is identical
/// across platforms for a given seed, unlike <random> distributions.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform-ish draw in [0, n). Modulo bias is irrelevant at the tiny
    /// ranges used here.
    std::uint64_t below(std::uint64_t n) { return next() % n; }

    /// Draw in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

}  // namespace sympel
