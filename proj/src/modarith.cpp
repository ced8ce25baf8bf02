// kybermat: NTT-domain matrix-vector polynomial multiplication for Kyber
// SPDX-License-Identifier: Apache-2.0
#include "kybermat/modarith.hpp"

#include <stdexcept>

namespace kybermat {

Residue pow_mod(Residue a, std::uint64_t e) noexcept
{
    std::uint32_t base = a;
    std::uint32_t acc = 1;
    while (e != 0) {
        if (e & 1) acc = (acc * base) % kQ;
        base = (base * base) % kQ;
        e >>= 1;
    }
    return static_cast<Residue>(acc);
}

Residue inv_mod(Residue a)
{
    if (a == 0) throw std::domain_error("inv_mod: zero has no inverse");
    // extended Euclid on (q, a); t tracks the Bezout coefficient of a
    std::int64_t r0 = kQ, r1 = a;
    std::int64_t t0 = 0, t1 = 1;
    while (r1 != 0) {
        std::int64_t quot = r0 / r1;
        std::int64_t tmp = r0 - quot * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - quot * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (t0 < 0) t0 += kQ;
    return static_cast<Residue>(t0);
}

} // namespace kybermat
