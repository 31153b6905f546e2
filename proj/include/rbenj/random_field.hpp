#ifndef RBENJ_RANDOM_FIELD_HPP
#define RBENJ_RANDOM_FIELD_HPP

#include <cstdint>
#include <random>

#include "rbenj/spectral.hpp"

namespace rbenj {

/// Real-symmetric field with coefficient decay (1+k^2)^(-s/2 - 1/2 - 0.05),
/// rescaled so ||result||_s == norm. Deterministic under the engine state.
SpectralField random_sobolev_field(const PeriodicGrid& grid, double s, double norm,
                                   std::mt19937_64& rng, int max_mode = -1);

inline SpectralField random_sobolev_field(const PeriodicGrid& grid, double s,
                                          double norm, std::uint64_t seed,
                                          int max_mode = -1) {
    std::mt19937_64 rng(seed);
    return random_sobolev_field(grid, s, norm, rng, max_mode);
}

}  // namespace rbenj

#endif
