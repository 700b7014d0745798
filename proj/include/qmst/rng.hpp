#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace qmst {

using Rng = std::mt19937_64;

// Bounded draws are implemented locally; seeded runs must replay identically
// regardless of the standard library in use.
inline std::uint64_t rand_below(Rng& rng, std::uint64_t n) {
    return rng() % n;
}

// Uniform in [0, 1).
inline double rand_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <typename T>
void shuffle_inplace(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::swap(v[i - 1], v[rand_below(rng, i)]);
    }
}

}  // namespace qmst
