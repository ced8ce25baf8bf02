// kybermat: NTT-domain matrix-vector polynomial multiplication for Kyber
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "kybermat/poly.hpp"

namespace kybermat {

/// Precomputed twiddle data for the negacyclic NTT of size m over Z_3329.
///
/// psi is a primitive 2m-th root of unity (17 for m=128, 289 for m=64).
/// The public evaluation ordering is bit-reversed: position j holds
/// f(psi^(2*bitrev(j)+1)). y_constant is the NTT image of the monomial y,
/// i.e. NTT(x^2) for m=128 and NTT(x^4) for m=64 in the original variable.
struct TwiddleTables {
    std::size_t m = 0;
    Residue psi = 0;
    Residue m_inverse = 0;
    std::vector<Residue> zetas;     // zetas[i] = psi^bitrev(i), i in [0, m)
    std::vector<Residue> inv_zetas; // elementwise inverses of zetas
    NttVector y_constant;
};

/// Name of the fixed public evaluation ordering.
inline constexpr std::string_view kEvalOrder = "bitrev";

/// Builds tables for m in {64, 128}; throws std::invalid_argument otherwise.
/// Uncounted (precomputation is outside all operation tallies).
TwiddleTables build_tables(std::size_t m);

/// Forward negacyclic NTT; counts (m/2)*log2(m) modmul and m*log2(m) modadd.
NttVector ntt_forward(const Polynomial& f, const TwiddleTables& t, OpCounter& ctx);

/// Exact inverse of ntt_forward, including the m^-1 scaling.
Polynomial ntt_inverse(const NttVector& v, const TwiddleTables& t, OpCounter& ctx);

/// O(m^2) direct evaluation at psi^(2*bitrev(j)+1); testing oracle, uncounted.
NttVector ntt_eval_reference(const Polynomial& f, const TwiddleTables& t);

NttVector pointwise_mul(const NttVector& u, const NttVector& v, OpCounter& ctx);
NttVector pointwise_add(const NttVector& u, const NttVector& v, OpCounter& ctx);
NttVector pointwise_sub(const NttVector& u, const NttVector& v, OpCounter& ctx);

/// Pointwise product with tables.y_constant; ticks yconst_products once and
/// modmul per element. This is the frequency-domain replacement for the
/// fast-filter delay element.
NttVector mul_y_constant(const NttVector& v, const TwiddleTables& t, OpCounter& ctx);

} // namespace kybermat
