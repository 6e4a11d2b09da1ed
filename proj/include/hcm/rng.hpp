#pragma once

#include <cstdint>
#include <random>

namespace hcm {

// All randomized operations take an explicit Rng; nothing touches global
// state. Independent streams for parallel sweeps are derived with
// derive_stream, which mixes the sub-stream index through SplitMix64.
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline Rng make_rng(std::uint64_t seed) { return Rng(splitmix64(seed)); }

inline Rng derive_stream(std::uint64_t seed, std::uint64_t stream) {
    return Rng(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x51ed2701)));
}

inline double uniform01(Rng& rng) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

inline bool bernoulli(Rng& rng, double p) { return uniform01(rng) < p; }

// Uniform integer in [0, n).
inline int uniform_below(Rng& rng, int n) {
    return std::uniform_int_distribution<int>(0, n - 1)(rng);
}

}  // namespace hcm
