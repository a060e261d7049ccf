#pragma once

#include <cstdint>
#include <random>

namespace quickdet {

/// SplitMix64 mixing step (Steele/Lea/Flood). Used as a counter-based hash to
/// derive statistically independent seeds from (master seed, index) pairs, so
/// trial i always sees the same stream no matter which worker runs it.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Seed for trial `index` within the stream rooted at `master`.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(index + 0x51a299f8d02aull));
}

/// Independent sub-stream root (e.g. one per sweep point or bisection step).
inline std::uint64_t derive_stream(std::uint64_t master, std::uint64_t stream_id) {
    return splitmix64(splitmix64(master) + stream_id * 0x9e3779b97f4a7c15ull);
}

using TrialRng = std::mt19937_64;

inline TrialRng make_trial_rng(std::uint64_t seed) {
    return TrialRng(splitmix64(seed));
}

}  // namespace quickdet
