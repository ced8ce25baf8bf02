// kybermat: NTT-domain matrix-vector polynomial multiplication for Kyber
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "kybermat/poly.hpp"

namespace kybermat {

/// Coefficient-domain product in Z_q[x]/(x^m + 1) by direct convolution
/// with sign wraparound. Reference oracle, deliberately independent of the
/// NTT code path and uncounted.
Polynomial negacyclic_mul_schoolbook(const Polynomial& a, const Polynomial& b);

/// Coefficient-domain matrix-vector product u = A^T r, where a[i][j] is the
/// entry in row i, column j of A^T. Reference oracle, uncounted.
PolyVector matvec_schoolbook(const std::vector<std::vector<Polynomial>>& a,
                             const PolyVector& r);

} // namespace kybermat
