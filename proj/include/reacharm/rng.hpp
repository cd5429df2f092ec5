#pragma once

#include <cstdint>
#include <random>

namespace reacharm {

using Rng = std::mt19937_64;

/// splitmix64 mix step; used to derive independent sub-seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Deterministic sub-seed for evaluation (iteration, index) pairs, so results
/// do not depend on evaluation scheduling.
inline std::uint64_t sub_seed(std::uint64_t master, std::uint64_t iteration, std::uint64_t index) {
    return splitmix64(master ^ splitmix64(iteration * 0x10001ULL + index + 1));
}

}  // namespace reacharm
