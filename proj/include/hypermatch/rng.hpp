#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace hypermatch {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Per-stage substream so results do not depend on scheduling: the stream is
// a pure function of (seed, stage id, iteration).
inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stage,
                                std::uint64_t iteration = 0) {
    return std::mt19937_64(splitmix64(splitmix64(seed ^ (stage * 0x9e3779b97f4a7c15ULL)) ^ iteration));
}

// Uniform integer in [0, bound) without distribution-object portability
// concerns.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    std::uint64_t threshold = (~std::uint64_t(0) - bound + 1) % bound;
    while (true) {
        std::uint64_t x = rng();
        if (x >= threshold) return x % bound;
    }
}

inline double unit_interval(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform r-subset of `pool`, returned sorted.
template <typename T>
std::vector<T> sample_subset(std::mt19937_64& rng, std::vector<T> pool, size_t r) {
    for (size_t i = 0; i < r; ++i) {
        size_t j = i + static_cast<size_t>(uniform_below(rng, pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    pool.resize(r);
    std::sort(pool.begin(), pool.end());
    return pool;
}

} // namespace hypermatch
