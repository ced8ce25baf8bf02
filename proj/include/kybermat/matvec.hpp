// kybermat: NTT-domain matrix-vector polynomial multiplication for Kyber
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "kybermat/faststruct.hpp"
#include "kybermat/ntt.hpp"
#include "kybermat/poly.hpp"
#include "kybermat/polyphase.hpp"

namespace kybermat {

/// Realization of the two-parallel structure. The four-parallel structure is
/// implemented in transposed form only.
enum class Form { transposed, original };

/// Matrix-vector stage algorithms, in report order.
enum class Algorithm {
    baseline4mult, // per-entry two-parallel structure, nothing shared
    baseline5mult, // per-entry schoolbook on phases, five products
    proposed2,     // two-parallel structure with sub-structure sharing
    unshared4,     // four-parallel structure, nothing shared across rows
    proposed4,     // nested two-parallel structure with sharing
};

std::string_view algorithm_name(Algorithm alg);
Algorithm algorithm_from_name(std::string_view name);

/// Decimation factor used by the algorithm (2 or 4).
std::size_t algorithm_L(Algorithm alg);

/// A length-k vector in the NTT domain: entries[j][t] is phase t of entry j,
/// each of size m = n / L.
struct NttDomainVector {
    std::size_t k = 0;
    std::size_t L = 0;
    std::vector<std::vector<NttVector>> entries;
};

/// A k x k matrix in the NTT domain: entries[i][j][t], row-major.
struct NttDomainMatrix {
    std::size_t k = 0;
    std::size_t L = 0;
    std::vector<std::vector<std::vector<NttVector>>> entries;
};

/// Separate tallies for the transform boundary (NTT / inverse NTT) and the
/// NTT-domain matrix-vector stage. Stage counts never include transforms.
struct PipelineCounters {
    OpCounter transform;
    OpCounter stage;
};

NttDomainVector vector_to_ntt(const PolyVector& r, std::size_t L, OpCounter& ctx);
NttDomainMatrix matrix_to_ntt(const std::vector<std::vector<Polynomial>>& a,
                              std::size_t L, OpCounter& ctx);
PolyVector vector_from_ntt(const NttDomainVector& u, OpCounter& ctx);

/// Proposed structure with sub-structure sharing; L = 2 supports both forms,
/// L = 4 is transposed only (original form throws std::invalid_argument).
NttDomainVector matvec_proposed(const NttDomainMatrix& a, const NttDomainVector& r,
                                Form form, OpCounter& ctx);

/// Two-parallel structure applied independently per matrix entry (L = 2).
NttDomainVector matvec_baseline_4mult(const NttDomainMatrix& a,
                                      const NttDomainVector& r, OpCounter& ctx);

/// Per-entry phase schoolbook with five products per entry (L = 2).
NttDomainVector matvec_baseline_5mult(const NttDomainMatrix& a,
                                      const NttDomainVector& r, OpCounter& ctx);

/// Four-parallel structure without cross-row sharing (L = 4).
NttDomainVector matvec_four_parallel_unshared(const NttDomainMatrix& a,
                                              const NttDomainVector& r,
                                              OpCounter& ctx);

/// Dispatch by algorithm; proposed algorithms use the transposed form.
NttDomainVector matvec_stage(Algorithm alg, const NttDomainMatrix& a,
                             const NttDomainVector& r, OpCounter& ctx);

/// Full coefficient-to-coefficient pipeline: forward transforms, stage,
/// inverse transforms. Transform work lands in pc.transform, stage work in
/// pc.stage.
PolyVector matvec_pipeline(Algorithm alg,
                           const std::vector<std::vector<Polynomial>>& a,
                           const PolyVector& r, PipelineCounters& pc);

/// Pipeline followed by a coefficient-domain error addition, u = A^T r + e.
PolyVector matvec_with_error(Algorithm alg,
                             const std::vector<std::vector<Polynomial>>& a,
                             const PolyVector& r, const PolyVector& e,
                             PipelineCounters& pc);

} // namespace kybermat
