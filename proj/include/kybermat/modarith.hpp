// kybermat: NTT-domain matrix-vector polynomial multiplication for Kyber
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace kybermat {

/// Kyber prime modulus.
inline constexpr std::uint32_t kQ = 3329;

/// Canonical representative of an element of Z_q, always in [0, q).
using Residue = std::uint16_t;

/// Tally of counted modular operations. Additions and subtractions share
/// one counter; y-constant products are the whole-vector multiplications
/// by NTT(x^L) and are also included in modmul element-wise.
struct OpCounter {
    std::uint64_t modmul = 0;
    std::uint64_t modadd = 0;
    std::uint64_t yconst_products = 0;

    OpCounter& operator+=(const OpCounter& o) noexcept
    {
        modmul += o.modmul;
        modadd += o.modadd;
        yconst_products += o.yconst_products;
        return *this;
    }
};

inline Residue add_mod(Residue a, Residue b, OpCounter& ctx) noexcept
{
    ++ctx.modadd;
    std::uint32_t s = std::uint32_t(a) + b;
    return static_cast<Residue>(s >= kQ ? s - kQ : s);
}

inline Residue sub_mod(Residue a, Residue b, OpCounter& ctx) noexcept
{
    ++ctx.modadd;
    return static_cast<Residue>(a >= b ? a - b : a + kQ - b);
}

inline Residue mul_mod(Residue a, Residue b, OpCounter& ctx) noexcept
{
    ++ctx.modmul;
    return static_cast<Residue>((std::uint32_t(a) * b) % kQ);
}

// Table-building arithmetic; deliberately uncounted.
Residue pow_mod(Residue a, std::uint64_t e) noexcept;

/// Inverse in Z_q. Throws std::domain_error for zero.
Residue inv_mod(Residue a);

} // namespace kybermat
