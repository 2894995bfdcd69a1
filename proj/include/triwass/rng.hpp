// Deterministic splitmix64 stream; seeds are part of every randomized
// interface so runs are reproducible byte for byte across platforms.
#pragma once

#include <cstdint>

namespace triwass {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound); bound >= 1.
    std::uint32_t below(std::uint32_t bound) { return std::uint32_t(next() % bound); }

    // Uniform in [lo, hi] inclusive.
    int range(int lo, int hi) { return lo + int(below(std::uint32_t(hi - lo + 1))); }

    // Derive an independent stream (for per-trial seeds).
    std::uint64_t fork_seed() { return next(); }

private:
    std::uint64_t state_;
};

}  // namespace triwass
