// kybermat: NTT-domain matrix-vector polynomial multiplication for Kyber
// SPDX-License-Identifier: Apache-2.0
#include "kybermat/oracle.hpp"

#include <stdexcept>

namespace kybermat {

Polynomial negacyclic_mul_schoolbook(const Polynomial& a, const Polynomial& b)
{
    const std::size_t m = a.size();
    if (m == 0 || b.size() != m)
        throw std::invalid_argument("negacyclic_mul_schoolbook: length mismatch");

    Polynomial out(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < m; ++j) {
            const std::uint64_t prod =
                std::uint64_t(a.coeffs[i]) * b.coeffs[j] % kQ;
            const std::size_t idx = i + j;
            Residue& slot = out.coeffs[idx % m];
            if (idx < m) {
                slot = static_cast<Residue>((slot + prod) % kQ);
            } else {
                // x^m = -1 wraps the high half with a sign flip
                slot = static_cast<Residue>((slot + kQ - prod) % kQ);
            }
        }
    }
    return out;
}

PolyVector matvec_schoolbook(const std::vector<std::vector<Polynomial>>& a,
                             const PolyVector& r)
{
    const std::size_t k = r.k();
    if (a.size() != k)
        throw std::invalid_argument("matvec_schoolbook: row count mismatch");

    const std::size_t m = r.entries[0].size();
    PolyVector u(k, m);
    for (std::size_t i = 0; i < k; ++i) {
        if (a[i].size() != k)
            throw std::invalid_argument("matvec_schoolbook: column count mismatch");
        for (std::size_t j = 0; j < k; ++j) {
            const Polynomial prod = negacyclic_mul_schoolbook(a[i][j], r.entries[j]);
            for (std::size_t c = 0; c < m; ++c)
                u.entries[i].coeffs[c] = static_cast<Residue>(
                    (u.entries[i].coeffs[c] + prod.coeffs[c]) % kQ);
        }
    }
    return u;
}

} // namespace kybermat
