// kybermat: NTT-domain matrix-vector polynomial multiplication for Kyber
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "kybermat/poly.hpp"

namespace kybermat {

/// Polyphase split of a polynomial: phases[t][i] = f[L*i + t].
struct PhaseSplit {
    std::size_t L = 0;
    std::vector<Polynomial> phases;

    bool operator==(const PhaseSplit&) const = default;
};

/// Splits f into L phase polynomials by coefficient index mod L.
/// Throws std::invalid_argument for unsupported L or indivisible length.
PhaseSplit decompose(const Polynomial& f, std::size_t L);

/// Inverse of decompose. Throws on inconsistent phase lengths.
Polynomial recompose(const PhaseSplit& s);

} // namespace kybermat
