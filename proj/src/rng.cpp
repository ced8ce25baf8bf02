// kybermat: NTT-domain matrix-vector polynomial multiplication for Kyber
// SPDX-License-Identifier: Apache-2.0
#include "kybermat/rng.hpp"

namespace kybermat {

Residue sample_residue(SplitMix64& rng)
{
    for (;;) {
        const auto v = static_cast<std::uint16_t>(rng.next() & 0xFFF);
        if (v < kQ)
            return v;
    }
}

Polynomial random_polynomial(SplitMix64& rng, std::size_t m)
{
    Polynomial f(m);
    for (auto& c : f.coeffs)
        c = sample_residue(rng);
    return f;
}

PolyVector random_poly_vector(SplitMix64& rng, std::size_t k, std::size_t n)
{
    PolyVector r(k, n);
    for (auto& e : r.entries)
        e = random_polynomial(rng, n);
    return r;
}

std::vector<std::vector<Polynomial>> random_matrix(SplitMix64& rng, std::size_t k,
                                                   std::size_t n)
{
    std::vector<std::vector<Polynomial>> a(k);
    for (auto& row : a) {
        row.reserve(k);
        for (std::size_t j = 0; j < k; ++j)
            row.push_back(random_polynomial(rng, n));
    }
    return a;
}

} // namespace kybermat
