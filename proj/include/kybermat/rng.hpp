// kybermat: NTT-domain matrix-vector polynomial multiplication for Kyber
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "kybermat/poly.hpp"

namespace kybermat {

/// SplitMix64 generator; fixed algorithm so seeds reproduce byte-identical
/// test vectors everywhere.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
};

/// Uniform residue in [0, q) by 12-bit rejection from successive outputs.
Residue sample_residue(SplitMix64& rng);

Polynomial random_polynomial(SplitMix64& rng, std::size_t m);
PolyVector random_poly_vector(SplitMix64& rng, std::size_t k, std::size_t n);
std::vector<std::vector<Polynomial>> random_matrix(SplitMix64& rng, std::size_t k,
                                                   std::size_t n);

} // namespace kybermat
