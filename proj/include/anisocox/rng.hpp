#pragma once

#include <cstdint>
#include <random>

namespace anisocox {

/// Engine used for all stochastic components. One engine per logical stream;
/// never share an engine across threads.
using Rng = std::mt19937_64;

/// splitmix64 finalizer. Decorrelates seeds that differ in few bits.
constexpr std::uint64_t mix_seed(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Seed for a derived stream (replicate, worker, ...). Replicate r of a run
/// with master seed s always uses derive_seed(s, r), independent of how work
/// is scheduled across threads.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) noexcept {
    return mix_seed(master ^ mix_seed(stream + 1));
}

inline Rng make_rng(std::uint64_t seed) { return Rng(mix_seed(seed)); }

} // namespace anisocox
