#pragma once

#include <cstdint>
#include <random>

namespace pacsig {

// splitmix64 mix step; used to spread user seeds and to derive
// per-replicate streams from a master seed.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Replicate seeds: seed of replicate r under master seed s is
// mix64(mix64(s) + r). Parallel schedules reproduce serial output.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t counter) {
    return mix64(mix64(master) + counter);
}

inline std::mt19937_64 make_engine(std::uint64_t seed) {
    return std::mt19937_64(mix64(seed));
}

} // namespace pacsig
